import type { PatternRow } from "./api.js";

export type SortKey = "support" | "length" | "pattern";

export interface SortSpec {
  key: SortKey;
  desc: boolean;
}

function compare(a: PatternRow, b: PatternRow, key: SortKey): number {
  switch (key) {
    case "support":
      return a.support - b.support;
    case "length":
      return a.length - b.length;
    case "pattern":
      return a.pattern < b.pattern ? -1 : a.pattern > b.pattern ? 1 : 0;
  }
}

/** Stable sort with (length, pattern) as the tiebreak so output is total. */
export function sortPatterns(rows: PatternRow[], spec: SortSpec): PatternRow[] {
  const sorted = [...rows].sort((a, b) => {
    const primary = compare(a, b, spec.key);
    if (primary !== 0) return spec.desc ? -primary : primary;
    return a.length - b.length || (a.pattern < b.pattern ? -1 : a.pattern > b.pattern ? 1 : 0);
  });
  return sorted;
}

/** Keep rows whose pattern contains the item (exact token match on ':'). */
export function filterByItem(rows: PatternRow[], itemText: string): PatternRow[] {
  const needle = itemText.trim();
  if (!needle) return rows;
  return rows.filter((row) => row.pattern.split(":").includes(needle));
}

/** Flip direction on a repeated key, else sort descending by the new key. */
export function nextSort(current: SortSpec, key: SortKey): SortSpec {
  if (current.key === key) return { key, desc: !current.desc };
  return { key, desc: key !== "pattern" };
}
