import { describe, expect, it } from "vitest";

import { DEFAULT_SPEC, buildChartOption, groupRows, renderSvg } from "../src/render.js";
import { SweepRow } from "../src/schema.js";

function mkRow(partial: Partial<SweepRow>): SweepRow {
  return {
    n: 500,
    mu: 0.1,
    k: 2,
    k2: 2,
    trials: 1000,
    masterSeed: 1,
    pMindeg: 0.5,
    pKconn: 0.45,
    ciHalfwidth: 0.03,
    meanDegreeEmp: 12.0,
    thresholdK2: 7,
    ...partial,
  };
}

function sweepRows(): SweepRow[] {
  const rows: SweepRow[] = [];
  for (const [k, threshold] of [
    [2, 7],
    [3, 9],
    [4, 11],
  ] as const) {
    for (let k2 = 2; k2 <= 14; k2++) {
      const p = Math.min(1, Math.max(0, (k2 - threshold + 3) / 6));
      rows.push(
        mkRow({ k, k2, thresholdK2: threshold, pMindeg: p, pKconn: p * 0.98 }),
      );
    }
  }
  return rows;
}

describe("groupRows", () => {
  it("groups by k with sorted k2 and labels carrying mu and k", () => {
    const groups = groupRows(sweepRows(), "k");
    expect(groups.map((g) => g.label)).toEqual([
      "mu=0.1, k=2",
      "mu=0.1, k=3",
      "mu=0.1, k=4",
    ]);
    for (const g of groups) {
      const xs = g.rows.map((r) => r.k2);
      expect(xs).toEqual([...xs].sort((a, b) => a - b));
    }
    expect(groups.map((g) => g.threshold)).toEqual([7, 9, 11]);
  });

  it("groups by mu", () => {
    const rows = [
      mkRow({ mu: 0.9, k2: 3 }),
      mkRow({ mu: 0.1, k2: 3 }),
      mkRow({ mu: 0.1, k2: 2 }),
    ];
    const groups = groupRows(rows, "mu");
    expect(groups.map((g) => g.label)).toEqual(["mu=0.1, k=2", "mu=0.9, k=2"]);
  });
});

describe("buildChartOption", () => {
  it("emits one curve per k plus one dashed threshold line each", () => {
    const option = buildChartOption(sweepRows(), DEFAULT_SPEC);
    const series = option.series as any[];
    expect(series).toHaveLength(3);
    for (const s of series) {
      expect(s.type).toBe("line");
      expect(s.markLine.lineStyle.type).toBe("dashed");
      expect(s.markLine.data).toHaveLength(1);
    }
    expect(series.map((s) => s.markLine.data[0].xAxis)).toEqual([7, 9, 11]);
  });

  it("doubles the series with --both", () => {
    const option = buildChartOption(sweepRows(), { ...DEFAULT_SPEC, both: true });
    const series = option.series as any[];
    expect(series).toHaveLength(6);
    expect(series.filter((s) => s.name.endsWith("k-conn"))).toHaveLength(3);
  });

  it("fixes the probability axis to [0, 1] and x to the sweep range", () => {
    const option = buildChartOption(sweepRows(), DEFAULT_SPEC);
    const y = option.yAxis as any;
    const x = option.xAxis as any;
    expect([y.min, y.max]).toEqual([0, 1]);
    expect([x.min, x.max]).toEqual([2, 14]);
  });

  it("skips the threshold line when the column is 0 (undefined)", () => {
    const rows = [mkRow({ thresholdK2: 0 }), mkRow({ k2: 3, thresholdK2: 0 })];
    const option = buildChartOption(rows, DEFAULT_SPEC);
    const series = option.series as any[];
    expect(series[0].markLine).toBeUndefined();
  });
});

describe("renderSvg", () => {
  it("produces an SVG document", () => {
    const svg = renderSvg(sweepRows(), { ...DEFAULT_SPEC, title: "curves" });
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("curves");
    expect(svg).toContain("min-degree");
  });

  it("is deterministic for identical input", () => {
    const rows = sweepRows();
    expect(renderSvg(rows, DEFAULT_SPEC)).toBe(renderSvg(rows, DEFAULT_SPEC));
  });
});
