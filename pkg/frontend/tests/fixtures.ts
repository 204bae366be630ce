import type { PatternRow } from "../src/api.js";

/** The ten frequent patterns of the bundled example at support 2. */
export const TEN_PATTERNS: PatternRow[] = [
  { pattern: "10", length: 1, support: 3, relative_support: 0.75 },
  { pattern: "20", length: 1, support: 2, relative_support: 0.5 },
  { pattern: "40", length: 1, support: 2, relative_support: 0.5 },
  { pattern: "50", length: 1, support: 2, relative_support: 0.5 },
  { pattern: "60", length: 1, support: 2, relative_support: 0.5 },
  { pattern: "70", length: 1, support: 2, relative_support: 0.5 },
  { pattern: "10:50", length: 2, support: 2, relative_support: 0.5 },
  { pattern: "10:60", length: 2, support: 2, relative_support: 0.5 },
  { pattern: "10:70", length: 2, support: 2, relative_support: 0.5 },
  { pattern: "20:40", length: 2, support: 2, relative_support: 0.5 },
];
