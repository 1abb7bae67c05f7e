#!/usr/bin/env node
/**
 * plotviz --csv sweep.csv --out curves.svg [--group-by k|mu] [--both]
 *         [--title TEXT]
 *
 * Reads a simulator sweep CSV and writes an SVG chart: one curve per group
 * with its dashed critical-k2 line; --both overlays the k-connectivity
 * curves. Exit codes: 0 ok, 1 schema/data error, 2 usage error.
 */

import * as fs from "node:fs";
import { pathToFileURL } from "node:url";

import { DEFAULT_SPEC, GroupBy, PlotSpec, renderSvg } from "./render.js";
import { NoDataError, SchemaError, parseSweepCsv } from "./schema.js";

interface CliArgs {
  csv: string;
  out: string;
  spec: PlotSpec;
}

export function parseArgs(argv: string[]): CliArgs {
  let csv: string | undefined;
  let out: string | undefined;
  const spec: PlotSpec = { ...DEFAULT_SPEC };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      i++;
      if (i >= argv.length) throw new UsageError(`${flag} needs a value`);
      return argv[i];
    };
    switch (flag) {
      case "--csv":
        csv = next();
        break;
      case "--out":
        out = next();
        break;
      case "--group-by": {
        const v = next();
        if (v !== "k" && v !== "mu")
          throw new UsageError(`--group-by must be k or mu, got ${v}`);
        spec.groupBy = v as GroupBy;
        break;
      }
      case "--both":
        spec.both = true;
        break;
      case "--title":
        spec.title = next();
        break;
      default:
        throw new UsageError(`unknown flag ${flag}`);
    }
  }
  if (!csv) throw new UsageError("--csv is required");
  if (!out) throw new UsageError("--out is required");
  return { csv, out, spec };
}

export class UsageError extends Error {}

export function run(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`usage error: ${(err as Error).message}\n`);
    return 2;
  }
  let text: string;
  try {
    text = fs.readFileSync(args.csv, "utf-8");
  } catch (err) {
    process.stderr.write(`cannot read ${args.csv}: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    const rows = parseSweepCsv(text);
    const svg = renderSvg(rows, args.spec);
    fs.writeFileSync(args.out, svg);
    process.stderr.write(`wrote ${args.out} (${rows.length} rows)\n`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof NoDataError) {
      process.stderr.write(`${err.message}\n`);
      return 1;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
