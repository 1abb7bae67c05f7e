/**
 * Transition-curve rendering: empirical probability vs k2, one curve per
 * group (k or mu), with the critical k2 drawn as a dashed vertical line per
 * group. Output is an SVG string from echarts' server-side renderer;
 * rendering is a pure function of the rows and spec (no animation, no
 * timestamps), so identical inputs give identical bytes.
 */

import * as echarts from "echarts";

import { SweepRow } from "./schema.js";

export type GroupBy = "k" | "mu";

export interface PlotSpec {
  groupBy: GroupBy;
  both: boolean;
  title: string;
  width: number;
  height: number;
}

export const DEFAULT_SPEC: PlotSpec = {
  groupBy: "k",
  both: false,
  title: "",
  width: 800,
  height: 560,
};

interface Group {
  label: string;
  rows: SweepRow[];
  threshold: number;
}

function groupKey(row: SweepRow, by: GroupBy): number {
  return by === "k" ? row.k : row.mu;
}

export function groupRows(rows: SweepRow[], by: GroupBy): Group[] {
  const byKey = new Map<number, SweepRow[]>();
  for (const row of rows) {
    const key = groupKey(row, by);
    const bucket = byKey.get(key);
    if (bucket === undefined) {
      byKey.set(key, [row]);
    } else {
      bucket.push(row);
    }
  }
  const groups: Group[] = [];
  for (const key of [...byKey.keys()].sort((a, b) => a - b)) {
    const bucket = byKey.get(key)!;
    bucket.sort((a, b) => a.k2 - b.k2);
    const label =
      by === "k"
        ? `mu=${bucket[0].mu}, k=${key}`
        : `mu=${key}, k=${bucket[0].k}`;
    groups.push({ label, rows: bucket, threshold: bucket[0].thresholdK2 });
  }
  return groups;
}

export function buildChartOption(
  rows: SweepRow[],
  spec: PlotSpec,
): echarts.EChartsOption {
  const groups = groupRows(rows, spec.groupBy);
  const xs = rows.map((r) => r.k2);
  const series: echarts.SeriesOption[] = [];
  for (const group of groups) {
    const base: echarts.LineSeriesOption = {
      type: "line",
      name: `${group.label} min-degree`,
      data: group.rows.map((r) => [r.k2, r.pMindeg]),
      symbolSize: 5,
    };
    // threshold_k2 = 0 marks "undefined" in the CSV; no line to draw then
    if (group.threshold > 0) {
      base.markLine = {
        silent: true,
        symbol: "none",
        lineStyle: { type: "dashed" },
        label: { formatter: `${group.threshold}` },
        data: [{ xAxis: group.threshold }],
      };
    }
    series.push(base);
    if (spec.both) {
      series.push({
        type: "line",
        name: `${group.label} k-conn`,
        data: group.rows.map((r) => [r.k2, r.pKconn]),
        lineStyle: { type: "dotted" },
        symbol: "triangle",
        symbolSize: 5,
      });
    }
  }
  return {
    animation: false,
    title: spec.title ? { text: spec.title, left: "center" } : undefined,
    legend: { bottom: 0 },
    grid: { left: 60, right: 30, top: spec.title ? 50 : 30, bottom: 70 },
    xAxis: {
      type: "value",
      name: "k2",
      min: Math.min(...xs),
      max: Math.max(...xs),
    },
    yAxis: {
      type: "value",
      name: "empirical probability",
      min: 0,
      max: 1,
    },
    series,
  };
}

export function renderSvg(rows: SweepRow[], spec: PlotSpec): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: spec.width,
    height: spec.height,
  });
  try {
    chart.setOption(buildChartOption(rows, spec));
    return normalizeClassIds(chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
}

/**
 * The SVG renderer embeds process-wide counters in generated ids: CSS class
 * names (zr<instance>-cls-<id>, with a global id counter) and clip-path ids
 * (zr<instance>-c<id>). Remap both to canonical sequences so identical
 * inputs give identical bytes regardless of render history.
 */
export function normalizeClassIds(svg: string): string {
  const canonical = new Map<string, string>();
  return svg
    .replace(/\bzr\d+-cls-(\d+)\b/g, (token) => {
      let mapped = canonical.get(token);
      if (mapped === undefined) {
        mapped = `zr-cls-${canonical.size}`;
        canonical.set(token, mapped);
      }
      return mapped;
    })
    .replace(/\bzr\d+-/g, "zr-");
}
