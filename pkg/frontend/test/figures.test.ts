import { readFileSync, readdirSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { FIGURES, SchemaError, parseCsv } from "../src/index.js";
import { requireColumns } from "../src/csv.js";

const DATA = join(__dirname, "..", "data");

function load(...names: string[]) {
  return names.map((name) =>
    parseCsv(readFileSync(join(DATA, name), "utf8"), name));
}

const CASES: Record<string, string[]> = {
  cusp: ["cusp_L4.csv", "cusp_L6.csv", "cusp_L8.csv", "cusp_L10.csv"],
  spectrum: ["spectrum_L4.csv"],
  order: ["order_L3.csv", "order_L4.csv"],
  wala: ["wala_without_pt.csv", "wala_with_pt.csv"],
  vqe: ["vqe_z2.csv"],
  scaling: ["scaling.csv"],
  truncation: ["truncation.csv"],
};

describe("figure renders from committed samples", () => {
  for (const [figure, files] of Object.entries(CASES)) {
    it(`${figure} renders deterministically`, () => {
      const first = FIGURES[figure](load(...files));
      const second = FIGURES[figure](load(...files));
      expect(first.startsWith("<svg")).toBe(true);
      expect(first.endsWith("</svg>\n")).toBe(true);
      expect(second).toBe(first); // byte-stable
      expect(first.length).toBeGreaterThan(500);
      expect(first).not.toMatch(/NaN|Infinity|undefined/);
    });
  }

  it("covers every registered figure id", () => {
    expect(Object.keys(CASES).sort()).toEqual(Object.keys(FIGURES).sort());
  });
});

describe("schema validation", () => {
  it("rejects a table with missing columns, naming them", () => {
    const bogus = parseCsv("a,b\n1,2\n", "bogus.csv");
    expect(() => FIGURES.cusp([bogus])).toThrowError(SchemaError);
    expect(() => FIGURES.cusp([bogus])).toThrowError(/theta/);
    expect(() => FIGURES.scaling([bogus])).toThrowError(/wall_ns/);
  });

  it("rejects an empty CSV", () => {
    expect(() => parseCsv("", "empty.csv")).toThrowError(SchemaError);
    expect(() => parseCsv("# only: metadata\n", "empty.csv"))
      .toThrowError(/no header/);
    expect(() => parseCsv("theta,value\n", "headeronly.csv"))
      .toThrowError(/no data rows/);
  });

  it("parses metadata lines", () => {
    const [table] = load("cusp_L4.csv");
    expect(table.metadata.command).toBe("scan");
    expect(table.metadata.engine).toBe("early");
    requireColumns(table, ["theta", "value"]);
  });

  it("wrong-figure input produces a diagnostic", () => {
    const [vqeTable] = load("vqe_z2.csv");
    expect(() => FIGURES.truncation([vqeTable])).toThrowError(/cutoff/);
  });

  it("figures demand their expected input arity", () => {
    const [table] = load("scaling.csv");
    expect(() => FIGURES.scaling([table, table])).toThrowError(/exactly one/);
    expect(() => FIGURES.cusp([])).toThrowError(/at least one/);
  });
});

describe("figure content sanity", () => {
  it("cusp panel draws one polyline per size plus the overlay", () => {
    const svg = FIGURES.cusp(load(...CASES.cusp));
    const polylines = svg.match(/<polyline /g) ?? [];
    expect(polylines.length).toBe(5);
  });

  it("vqe panel separates the two ansatz curves", () => {
    const svg = FIGURES.vqe(load("vqe_z2.csv"));
    expect(svg).toContain("with_pt");
    expect(svg).toContain("without_pt");
  });

  it("committed samples carry finite values only", () => {
    for (const files of Object.values(CASES)) {
      for (const [table] of [load(...files)]) {
        for (const row of table.rows) {
          if ("ok" in row) expect(row.ok).toBe("True");
        }
      }
    }
  });
});
