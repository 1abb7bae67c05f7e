/**
 * Sweep CSV schema: the exact column set written by the simulator's
 * experiment harness. Anything else is rejected with a column diff so a
 * mismatched producer is diagnosed immediately.
 */

import Papa from "papaparse";

export const EXPECTED_COLUMNS = [
  "n",
  "mu",
  "k",
  "k2",
  "trials",
  "master_seed",
  "p_mindeg",
  "p_kconn",
  "ci_halfwidth",
  "mean_degree_emp",
  "threshold_k2",
] as const;

export interface SweepRow {
  n: number;
  mu: number;
  k: number;
  k2: number;
  trials: number;
  masterSeed: number;
  pMindeg: number;
  pKconn: number;
  ciHalfwidth: number;
  meanDegreeEmp: number;
  thresholdK2: number;
}

export class SchemaError extends Error {
  readonly missing: string[];
  readonly unexpected: string[];

  constructor(missing: string[], unexpected: string[]) {
    const parts = ["CSV schema mismatch"];
    if (missing.length > 0) parts.push(`missing columns: ${missing.join(", ")}`);
    if (unexpected.length > 0)
      parts.push(`unexpected columns: ${unexpected.join(", ")}`);
    super(parts.join("; "));
    this.name = "SchemaError";
    this.missing = missing;
    this.unexpected = unexpected;
  }
}

export class NoDataError extends Error {
  constructor() {
    super("no data rows");
    this.name = "NoDataError";
  }
}

export function parseSweepCsv(text: string): SweepRow[] {
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new Error(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const records = parsed.data;
  if (records.length === 0) {
    throw new SchemaError([...EXPECTED_COLUMNS], []);
  }
  const header = records[0].map((c) => c.trim());
  const expected = new Set<string>(EXPECTED_COLUMNS);
  const got = new Set(header);
  const missing = EXPECTED_COLUMNS.filter((c) => !got.has(c));
  const unexpected = header.filter((c) => !expected.has(c));
  const inOrder = header.join(",") === EXPECTED_COLUMNS.join(",");
  if (missing.length > 0 || unexpected.length > 0 || !inOrder) {
    throw new SchemaError(missing, unexpected);
  }
  const rows: SweepRow[] = [];
  for (const record of records.slice(1)) {
    if (record.length !== EXPECTED_COLUMNS.length) {
      throw new Error(
        `expected ${EXPECTED_COLUMNS.length} fields per row, got ${record.length}`,
      );
    }
    const num = record.map(Number);
    rows.push({
      n: num[0],
      mu: num[1],
      k: num[2],
      k2: num[3],
      trials: num[4],
      masterSeed: num[5],
      pMindeg: num[6],
      pKconn: num[7],
      ciHalfwidth: num[8],
      meanDegreeEmp: num[9],
      thresholdK2: num[10],
    });
  }
  if (rows.length === 0) {
    throw new NoDataError();
  }
  return rows;
}
