import { describe, expect, it } from "vitest";

import {
  EXPECTED_COLUMNS,
  NoDataError,
  SchemaError,
  parseSweepCsv,
} from "../src/schema.js";

const HEADER = EXPECTED_COLUMNS.join(",");

function row(k: number, k2: number, p: number, threshold: number): string {
  return `500,0.500000,${k},${k2},1000,42,${p.toFixed(6)},${(p * 0.99).toFixed(6)},0.030000,25.600000,${threshold}`;
}

describe("parseSweepCsv", () => {
  it("parses a well-formed file", () => {
    const text = [HEADER, row(2, 5, 0.1, 13), row(2, 13, 0.7, 13)].join("\n");
    const rows = parseSweepCsv(text);
    expect(rows).toHaveLength(2);
    expect(rows[0].n).toBe(500);
    expect(rows[0].mu).toBeCloseTo(0.5);
    expect(rows[1].k2).toBe(13);
    expect(rows[1].pMindeg).toBeCloseTo(0.7);
    expect(rows[1].thresholdK2).toBe(13);
  });

  it("rejects a header with missing and unexpected columns", () => {
    const badHeader = HEADER.replace("p_kconn", "p_connected");
    const text = [badHeader, row(2, 5, 0.1, 13)].join("\n");
    try {
      parseSweepCsv(text);
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(SchemaError);
      const schemaErr = err as SchemaError;
      expect(schemaErr.missing).toEqual(["p_kconn"]);
      expect(schemaErr.unexpected).toEqual(["p_connected"]);
      expect(schemaErr.message).toContain("p_kconn");
      expect(schemaErr.message).toContain("p_connected");
    }
  });

  it("rejects reordered columns", () => {
    const shuffled = [...EXPECTED_COLUMNS].reverse().join(",");
    expect(() => parseSweepCsv([shuffled, row(2, 5, 0.1, 13)].join("\n"))).toThrow(
      SchemaError,
    );
  });

  it("rejects a header-only file", () => {
    expect(() => parseSweepCsv(HEADER)).toThrow(NoDataError);
    expect(() => parseSweepCsv(HEADER)).toThrow("no data rows");
  });

  it("rejects short rows", () => {
    expect(() => parseSweepCsv([HEADER, "1,2,3"].join("\n"))).toThrow(
      /expected 11 fields/,
    );
  });
});
