import { ApiClient } from "./api.js";
import { debounce } from "./debounce.js";
import { pollJob } from "./poll.js";
import { RequestSequencer } from "./sequenced.js";
import {
  acceptPreview,
  canMine,
  initialState,
  onWindowEdited,
  validateSupport,
  windowComplete,
} from "./state.js";
import { filterByItem, nextSort, sortPatterns, type SortKey } from "./table.js";

const api = new ApiClient();
const previewSeq = new RequestSequencer();
let state = initialState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const startInput = el<HTMLInputElement>("window-start");
const endInput = el<HTMLInputElement>("window-end");
const kInput = el<HTMLInputElement>("sample-k");
const freezeToggle = el<HTMLInputElement>("freeze-toggle");
const supportInput = el<HTMLInputElement>("min-support");
const algorithmSelect = el<HTMLSelectElement>("algorithm");
const mineButton = el<HTMLButtonElement>("mine-button");
const supportError = el<HTMLElement>("support-error");
const banner = el<HTMLElement>("banner");
const statsLine = el<HTMLElement>("dataset-stats");
const previewStats = el<HTMLElement>("preview-stats");
const previewBody = el<HTMLTableSectionElement>("preview-body");
const previewEmpty = el<HTMLElement>("preview-empty");
const jobStatus = el<HTMLElement>("job-status");
const resultsSection = el<HTMLElement>("results-section");
const resultsBody = el<HTMLTableSectionElement>("results-body");
const resultsMeta = el<HTMLElement>("results-meta");
const filterInput = el<HTMLInputElement>("item-filter");
const csvLink = el<HTMLAnchorElement>("csv-link");

function setBanner(message: string | null) {
  state = { ...state, banner: message };
  banner.textContent = message ?? "";
  banner.hidden = message === null;
}

function renderPreview() {
  const preview = state.preview;
  previewBody.replaceChildren();
  if (!preview || preview.sample.length === 0) {
    previewEmpty.hidden = false;
    previewEmpty.textContent = windowComplete(state)
      ? "No objects have records in this window."
      : "Pick a start and end date to preview sequences.";
    previewStats.textContent = "";
  } else {
    previewEmpty.hidden = true;
    for (const row of preview.sample) {
      const tr = document.createElement("tr");
      const idCell = document.createElement("td");
      idCell.textContent = String(row.object_id);
      const seqCell = document.createElement("td");
      seqCell.textContent = row.sequence;
      seqCell.className = "pattern";
      tr.append(idCell, seqCell);
      previewBody.append(tr);
    }
    const s = preview.stats;
    previewStats.textContent =
      `${s.object_count} objects · length min ${s.min_length} / ` +
      `avg ${s.avg_length.toFixed(2)} / max ${s.max_length} · ` +
      `${s.distinct_items} distinct items · ${s.interval_days} day interval`;
  }
  mineButton.disabled = !canMine(state);
}

function renderJob() {
  const job = state.job;
  if (!job) {
    jobStatus.textContent = "";
    return;
  }
  jobStatus.textContent =
    job.state === "failed" ? `job ${job.id} failed: ${job.error ?? "unknown error"}` : `job ${job.id}: ${job.state}`;
}

function renderResults() {
  const result = state.result;
  if (!result) {
    resultsSection.hidden = true;
    return;
  }
  resultsSection.hidden = false;
  const rows = sortPatterns(filterByItem(result.patterns, state.filterItem), state.sort);
  resultsBody.replaceChildren();
  for (const row of rows) {
    const tr = document.createElement("tr");
    const pattern = document.createElement("td");
    pattern.textContent = row.pattern;
    pattern.className = "pattern";
    const length = document.createElement("td");
    length.textContent = String(row.length);
    const support = document.createElement("td");
    support.textContent = String(row.support);
    const relative = document.createElement("td");
    relative.textContent = (row.relative_support * 100).toFixed(1) + "%";
    tr.append(pattern, length, support, relative);
    resultsBody.append(tr);
  }
  resultsMeta.textContent =
    `${rows.length} of ${result.patterns.length} patterns · ` +
    `${result.algorithm} · threshold ${result.threshold} of ${result.object_count} objects`;
  csvLink.href = api.resultsCsvUrl(result.job_id);
}

async function refreshPreview() {
  if (!windowComplete(state)) {
    state = { ...state, preview: null, previewPending: false };
    renderPreview();
    return;
  }
  const ticket = previewSeq.next();
  try {
    const preview = await api.preview(state.window.start, state.window.end, state.k);
    if (!previewSeq.accept(ticket)) return; // a newer window's preview already rendered
    state = acceptPreview(state, preview);
    setBanner(null);
  } catch (err) {
    if (!previewSeq.accept(ticket)) return;
    state = { ...state, preview: null, previewPending: false };
    setBanner(`preview failed: ${(err as Error).message}`);
  }
  renderPreview();
}

const debouncedPreview = debounce(refreshPreview, 300);

function windowChanged() {
  state = onWindowEdited(state, startInput.value, endInput.value);
  freezeToggle.checked = false;
  mineButton.disabled = true;
  debouncedPreview();
}

async function startMining() {
  const check = validateSupport(supportInput.value);
  if (!check.ok) {
    supportError.textContent = check.message ?? "invalid support";
    return;
  }
  supportError.textContent = "";
  mineButton.disabled = true;
  try {
    const request = {
      start: state.window.start,
      end: state.window.end,
      min_support: check.value!,
      algorithm: algorithmSelect.value as "rsp" | "gsp",
    };
    const { job_id } = await api.submitMine(request);
    const job = {
      id: job_id,
      state: "pending" as const,
      algorithm: request.algorithm,
      window: { start: request.start, end: request.end },
      min_support: request.min_support,
    };
    state = { ...state, job, result: null };
    renderJob();
    renderResults();
    await pollJob((id) => api.job(id), job_id, {
      onUpdate: (job) => {
        state = { ...state, job };
        renderJob();
      },
    });
    const result = await api.results(job_id);
    state = { ...state, result };
    renderResults();
  } catch (err) {
    setBanner(`mining failed: ${(err as Error).message}`);
  } finally {
    mineButton.disabled = !canMine(state);
  }
}

function wireSortHeaders() {
  for (const header of document.querySelectorAll<HTMLTableCellElement>("th[data-sort]")) {
    header.addEventListener("click", () => {
      state = { ...state, sort: nextSort(state.sort, header.dataset.sort as SortKey) };
      renderResults();
    });
  }
}

async function init() {
  startInput.addEventListener("input", windowChanged);
  endInput.addEventListener("input", windowChanged);
  kInput.addEventListener("input", () => {
    const k = Number(kInput.value);
    state = { ...state, k: Number.isInteger(k) && k >= 1 ? k : 10 };
    debouncedPreview();
  });
  freezeToggle.addEventListener("change", () => {
    state = { ...state, frozen: freezeToggle.checked };
    mineButton.disabled = !canMine(state);
  });
  supportInput.addEventListener("input", () => {
    supportError.textContent = "";
  });
  mineButton.addEventListener("click", startMining);
  filterInput.addEventListener("input", () => {
    state = { ...state, filterItem: filterInput.value };
    renderResults();
  });
  wireSortHeaders();

  try {
    const stats = await api.stats();
    state = { ...state, stats };
    statsLine.textContent =
      `${stats.objects} objects · ${stats.records} records · ${stats.items} items` +
      (stats.time_span ? ` · ${stats.time_span[0]} to ${stats.time_span[1]}` : "");
    if (stats.time_span) {
      startInput.value = stats.time_span[0];
      endInput.value = stats.time_span[1];
      state = onWindowEdited(state, startInput.value, endInput.value);
      await refreshPreview();
    }
  } catch (err) {
    setBanner(`could not reach the service: ${(err as Error).message}`);
  }
  renderPreview();
}

init();
