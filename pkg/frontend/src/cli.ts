#!/usr/bin/env node
/**
 * dfflab-plot: renders the standard figures from a directory of dfflab CSVs.
 *
 *   dfflab-plot lmg     --in out/ --out fig1.svg [--h 0.8,0.95,1.1] [--log-chi]
 *   dfflab-plot hubbard --in out/ --out fig2.svg [--u 0.5,4,20]     [--log-chi]
 *
 * Exit codes: 0 rendered (warnings go to stderr), 1 bad input or usage.
 */
import { realpathSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { SchemaError, readTable } from "./csv.js";
import { SubsetError, renderHubbardFigure, renderLmgFigure } from "./figures.js";

const USAGE = `usage: dfflab-plot lmg|hubbard --in <dir> --out <file.svg> [options]

  lmg reads lmg_density.csv and lmg_dff.csv; hubbard reads hubbard_dos.csv
  and hubbard_dff.csv from the --in directory, and writes one SVG figure.

  --h a,b,...    field values for the lmg density panel (default: 5 spread)
  --u a,b,...    couplings for the hubbard density-of-state panel
                 (default: every 10th, largest to smallest)
  --log-chi      log scale on the susceptibility panel
  --help         this text
`;

function fail(message: string): number {
  process.stderr.write(`dfflab-plot: ${message}\n`);
  return 1;
}

function parseList(raw: string, flag: string): number[] {
  const values = raw.split(",").map((part) => Number(part.trim()));
  if (values.length === 0 || values.some((v) => !Number.isFinite(v))) {
    throw new SubsetError(`${flag} expects a comma-separated list of numbers, got '${raw}'`);
  }
  return values;
}

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        h: { type: "string" },
        u: { type: "string" },
        "log-chi": { type: "boolean", default: false },
        help: { type: "boolean", default: false },
      },
    });
  } catch (err) {
    return fail(`${(err as Error).message}\n${USAGE}`);
  }
  if (parsed.values.help) {
    process.stdout.write(USAGE);
    return 0;
  }
  const command = parsed.positionals[0];
  if (parsed.positionals.length !== 1 || (command !== "lmg" && command !== "hubbard")) {
    return fail(`expected one command, lmg or hubbard\n${USAGE}`);
  }
  const inDir = parsed.values["in"];
  const outFile = parsed.values.out;
  if (!inDir || !outFile) {
    return fail(`--in and --out are required\n${USAGE}`);
  }
  if (command === "lmg" && parsed.values.u !== undefined) {
    return fail("--u applies to the hubbard command (use --h)");
  }
  if (command === "hubbard" && parsed.values.h !== undefined) {
    return fail("--h applies to the lmg command (use --u)");
  }

  try {
    const logChi = parsed.values["log-chi"];
    const result =
      command === "lmg"
        ? renderLmgFigure(
            readTable(join(inDir, "lmg_density.csv")),
            readTable(join(inDir, "lmg_dff.csv")),
            { subset: parsed.values.h ? parseList(parsed.values.h, "--h") : undefined, logChi },
          )
        : renderHubbardFigure(
            readTable(join(inDir, "hubbard_dos.csv")),
            readTable(join(inDir, "hubbard_dff.csv")),
            { subset: parsed.values.u ? parseList(parsed.values.u, "--u") : undefined, logChi },
          );
    for (const warning of result.warnings) {
      process.stderr.write(`dfflab-plot: warning: ${warning}\n`);
    }
    writeFileSync(outFile, result.svg);
    process.stdout.write(`wrote ${outFile}\n`);
    return 0;
  } catch (err) {
    if (
      err instanceof SchemaError ||
      err instanceof SubsetError ||
      (err instanceof Error && "code" in err)
    ) {
      return fail(err.message);
    }
    throw err;
  }
}

const entry = process.argv[1] ? pathToFileURL(realpathSync(process.argv[1])).href : "";
if (import.meta.url === entry) {
  process.exit(main(process.argv.slice(2)));
}
