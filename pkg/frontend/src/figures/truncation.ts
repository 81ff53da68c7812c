/**
 * Truncation-transition panel: layer-series error against the cutoff for
 * each angle in the table (`bench truncation` CSV schema), log-log, showing
 * the power-law decay at the critical angle and the exponential collapse
 * away from it.
 */

import { Table, requireColumns } from "../csv.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, decadeLabel, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length !== 1) {
    throw new Error("truncation figure takes exactly one bench CSV");
  }
  const table = inputs[0];
  requireColumns(table, ["theta", "cutoff", "error"], "truncation input");
  const thetas = [...new Set(table.rows.map((r) => r.theta))];

  const cutoffs = table.rows.map((r) => Number(r.cutoff));
  const errors = table.rows.map((r) => Number(r.error)).filter((e) => e > 0);
  const svg = new Svg(640, 420);
  const frame: Frame = { left: 80, top: 30, width: 500, height: 330,
                         xMin: Math.min(...cutoffs) / 1.3,
                         xMax: Math.max(...cutoffs) * 1.3,
                         yMin: Math.max(Math.min(...errors) / 5, 1e-18),
                         yMax: Math.max(...errors) * 5,
                         xLog: true, yLog: true };
  drawFrame(svg, frame, "layer cutoff", "series error", "truncation transition");
  xTicks(svg, frame, [...new Set(cutoffs)], (v) => v.toFixed(0));
  const decades: number[] = [];
  for (let e = -16; e <= 0; e += 4) decades.push(Math.pow(10, e));
  yTicks(svg, frame, decades.filter((d) => d >= frame.yMin && d <= frame.yMax),
         decadeLabel);

  const entries: Array<[string, string]> = [];
  thetas.forEach((theta, index) => {
    const subset = table.rows.filter((r) => r.theta === theta);
    const color = PALETTE[index % PALETTE.length];
    series(svg, frame,
           subset.map((r) => Number(r.cutoff)),
           subset.map((r) => Number(r.error)), color, 2);
    entries.push([`theta = ${Number(theta).toFixed(3)}`, color]);
  });
  // the inverse-square-root guide through the largest-error curve
  const guideX = [...new Set(cutoffs)];
  const anchor = Math.max(...errors);
  const guideY = guideX.map((c) => anchor * Math.sqrt(guideX[0] / c));
  series(svg, frame, guideX, guideY, "#222", 1, "5,3");
  entries.push(["1/sqrt(cutoff)", "#222"]);
  legend(svg, frame, entries);
  return svg.render();
}
