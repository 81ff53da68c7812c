/**
 * Variational benchmark panel: relative ground-energy error against the
 * coupling for each ansatz in the table (`vqe` CSV schema).
 */

import { Table, okRows, requireColumns } from "../csv.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length !== 1) {
    throw new Error("vqe figure takes exactly one results CSV");
  }
  const table = inputs[0];
  requireColumns(table, ["x", "rel_error", "ansatz"], "vqe input");
  const rows = table.rows;
  const ansaetze = [...new Set(rows.map((r) => r.ansatz))].sort();

  const maxError = Math.max(...rows.map((r) => Number(r.rel_error)));
  const top = Math.max(0.05, Math.ceil(maxError * 20) / 20);
  const svg = new Svg(640, 420);
  const frame: Frame = { left: 70, top: 30, width: 520, height: 330,
                         xMin: 0, xMax: 1, yMin: 0, yMax: top };
  drawFrame(svg, frame, "coupling x", "relative energy error",
            "variational benchmark");
  xTicks(svg, frame, [0, 0.25, 0.5, 0.75, 1], (v) => v.toFixed(2));
  yTicks(svg, frame, [0, top / 2, top], (v) => v.toFixed(3));

  const entries: Array<[string, string]> = [];
  ansaetze.forEach((ansatz, index) => {
    const subset = rows.filter((r) => r.ansatz === ansatz);
    const color = PALETTE[index % PALETTE.length];
    const xs = subset.map((r) => Number(r.x));
    const ys = subset.map((r) => Number(r.rel_error));
    series(svg, frame, xs, ys, color);
    xs.forEach((x, i) => {
      if (i % 2 === 0) {
        svg.circle(70 + 520 * x, 30 + 330 * (1 - ys[i] / top), 2.4, color);
      }
    });
    entries.push([ansatz, color]);
  });
  legend(svg, frame, entries);
  return svg.render();
}
