/**
 * Entanglement panel: half-cut entropy (left axis) and the four lowest
 * spectrum levels xi0..xi3 (right panel) over the angle sweep
 * (`scan --obs entropy` schema).
 */

import { Table, numericColumn, okRows, requireColumns } from "../csv.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length !== 1) {
    throw new Error("spectrum figure takes exactly one entropy CSV");
  }
  const table = inputs[0];
  requireColumns(table, ["theta", "value", "xi0", "xi1", "xi2", "xi3"],
                 "spectrum input");
  const rows = okRows(table);
  const thetas = rows.map((r) => Number(r.theta));

  const svg = new Svg(760, 400);
  const left: Frame = { left: 60, top: 30, width: 300, height: 310,
                        xMin: -3.2, xMax: 3.2, yMin: 0, yMax: 3.0 };
  drawFrame(svg, left, "whip angle (rad)", "entropy", "half-cut entropy");
  xTicks(svg, left, [-3.14, -1.57, 0, 1.57, 3.14], (v) => v.toFixed(2));
  yTicks(svg, left, [0, 1, 2, 3], (v) => v.toFixed(0));
  series(svg, left, thetas, rows.map((r) => Number(r.value)), PALETTE[0]);

  const right: Frame = { left: 430, top: 30, width: 300, height: 310,
                         xMin: -3.2, xMax: 3.2, yMin: 0, yMax: 6.0 };
  drawFrame(svg, right, "whip angle (rad)", "spectrum level",
            "low-lying spectrum");
  xTicks(svg, right, [-3.14, -1.57, 0, 1.57, 3.14], (v) => v.toFixed(2));
  yTicks(svg, right, [0, 2, 4, 6], (v) => v.toFixed(0));
  const entries: Array<[string, string]> = [];
  for (let level = 0; level < 4; level++) {
    const color = PALETTE[level % PALETTE.length];
    series(svg, right, thetas, rows.map((r) => Number(r[`xi${level}`])), color);
    entries.push([`xi${level}`, color]);
  }
  legend(svg, right, entries);
  return svg.render();
}
