/**
 * Order-parameter panel: finite-size boundary-X averages (one CSV per size,
 * `scan --obs order` schema) against the closed form that vanishes on the
 * symmetry-preserving arcs.
 */

import { Table, okRows, requireColumns } from "../csv.js";
import { grid, orderParameter } from "../analytic.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length === 0) {
    throw new Error("order figure needs at least one scan CSV");
  }
  const svg = new Svg(640, 420);
  const frame: Frame = { left: 70, top: 30, width: 520, height: 330,
                         xMin: -3.2, xMax: 3.2, yMin: -1.1, yMax: 1.1 };
  drawFrame(svg, frame, "whip angle (rad)", "boundary-X average",
            "order parameter");
  xTicks(svg, frame, [-3.14, -1.57, 0, 1.57, 3.14], (v) => v.toFixed(2));
  yTicks(svg, frame, [-1, 0, 1], (v) => v.toFixed(0));

  const entries: Array<[string, string]> = [];
  inputs.forEach((table, index) => {
    requireColumns(table, ["theta", "value", "L"], `order input ${index + 1}`);
    const rows = okRows(table);
    const color = PALETTE[index % PALETTE.length];
    series(svg, frame, rows.map((r) => Number(r.theta)),
           rows.map((r) => Number(r.value)), color);
    entries.push([`L = ${rows[0].L}`, color]);
  });

  const thetas = grid(-3.2, 3.2, 1281);
  series(svg, frame, thetas, thetas.map(orderParameter), "#222", 1.2, "5,3");
  entries.push(["closed form", "#222"]);
  legend(svg, frame, entries);
  return svg.render();
}
