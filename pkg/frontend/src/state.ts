import type { DatasetStats, JobView, PreviewResponse, ResultView } from "./api.js";
import type { SortSpec } from "./table.js";

/** Everything the console renders; updated only from user input and the
 * last accepted server responses. */
export interface ViewState {
  stats: DatasetStats | null;
  window: { start: string; end: string };
  k: number;
  frozen: boolean;
  preview: PreviewResponse | null;
  previewPending: boolean;
  job: JobView | null;
  result: ResultView | null;
  sort: SortSpec;
  filterItem: string;
  banner: string | null;
}

export function initialState(): ViewState {
  return {
    stats: null,
    window: { start: "", end: "" },
    k: 10,
    frozen: false,
    preview: null,
    previewPending: false,
    job: null,
    result: null,
    sort: { key: "support", desc: true },
    filterItem: "",
    banner: null,
  };
}

export interface SupportCheck {
  ok: boolean;
  value?: number;
  message?: string;
}

/** Client-side gate for the support field: integer >= 1 is an absolute
 * count, a fraction in (0,1) is a share of objects. Anything else never
 * reaches the server. */
export function validateSupport(text: string): SupportCheck {
  const trimmed = text.trim();
  if (!trimmed) return { ok: false, message: "minimum support is required" };
  const value = Number(trimmed);
  if (!Number.isFinite(value)) return { ok: false, message: `not a number: ${trimmed}` };
  if (value <= 0) return { ok: false, message: "minimum support must be positive" };
  if (Number.isInteger(value) && !trimmed.includes(".")) {
    return { ok: true, value };
  }
  if (value < 1) return { ok: true, value };
  return { ok: false, message: "use an integer count or a fraction below 1" };
}

export function windowComplete(state: ViewState): boolean {
  return state.window.start !== "" && state.window.end !== "" && state.window.start <= state.window.end;
}

export function previewHasRows(state: ViewState): boolean {
  return state.preview !== null && state.preview.sample.length > 0;
}

/** Mining is gated on a frozen window whose preview showed data. */
export function canMine(state: ViewState): boolean {
  return state.frozen && windowComplete(state) && previewHasRows(state) && !state.previewPending;
}

/** A window edit invalidates the frozen flag and the preview on display. */
export function onWindowEdited(state: ViewState, start: string, end: string): ViewState {
  return { ...state, window: { start, end }, frozen: false, previewPending: true };
}

export function acceptPreview(state: ViewState, preview: PreviewResponse): ViewState {
  return { ...state, preview, previewPending: false, banner: null };
}
