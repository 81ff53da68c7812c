/**
 * Usage: node dist/cli.js <figure-id> --out figure.svg input1.csv [input2.csv ...]
 *
 * Renders one figure from whiplab CSV sweeps.  Schema mismatches exit with
 * code 2 and a column diagnostic; anything else unexpected exits 1.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { basename } from "node:path";

import { FIGURES, SchemaError, parseCsv } from "./index.js";

function main(argv: string[]): number {
  const args = [...argv];
  const figureId = args.shift();
  if (!figureId || !(figureId in FIGURES)) {
    console.error(`usage: cli.js <${Object.keys(FIGURES).join("|")}> ` +
                  `--out figure.svg input.csv [...]`);
    return 2;
  }
  let outPath = `${figureId}.svg`;
  const inputs: string[] = [];
  for (let i = 0; i < args.length; i++) {
    if (args[i] === "--out") {
      outPath = args[++i];
    } else {
      inputs.push(args[i]);
    }
  }
  if (inputs.length === 0) {
    console.error("no input CSVs given");
    return 2;
  }
  try {
    const tables = inputs.map((path) =>
      parseCsv(readFileSync(path, "utf8"), basename(path)));
    const svg = FIGURES[figureId](tables);
    writeFileSync(outPath, svg);
    console.log(`wrote ${outPath}`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 2;
    }
    console.error(String(err));
    return 1;
  }
}

process.exit(main(process.argv.slice(2)));
