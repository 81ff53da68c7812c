/**
 * Scaling log-log panel: median wall time and retained-string count per
 * lattice size (`bench scaling` CSV schema), with quartic and quadratic
 * reference slopes anchored at the largest size.
 */

import { Table, okRows, requireColumns } from "../csv.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length !== 1) {
    throw new Error("scaling figure takes exactly one bench CSV");
  }
  const table = inputs[0];
  requireColumns(table, ["L", "wall_ns", "max_strings"], "scaling input");
  const rows = table.rows;
  const sizes = rows.map((r) => Number(r.L));
  const walls = rows.map((r) => Number(r.wall_ns) / 1e9);
  const strings = rows.map((r) => Number(r.max_strings));

  const svg = new Svg(760, 420);
  const lo = Math.min(...sizes) / 1.3;
  const hi = Math.max(...sizes) * 1.3;

  const left: Frame = { left: 70, top: 30, width: 290, height: 310,
                        xMin: lo, xMax: hi,
                        yMin: Math.min(...walls) / 3, yMax: Math.max(...walls) * 3,
                        xLog: true, yLog: true };
  drawFrame(svg, left, "lattice size L", "wall time (s)", "time scaling");
  xTicks(svg, left, sizes, (v) => v.toFixed(0));
  series(svg, left, sizes, walls, PALETTE[1], 2);
  const anchorT = walls[walls.length - 1];
  const refT = sizes.map((L) => anchorT * Math.pow(L / sizes[sizes.length - 1], 4));
  series(svg, left, sizes, refT, "#222", 1, "5,3");
  legend(svg, left, [["measured", PALETTE[1]], ["L^4 reference", "#222"]]);

  const right: Frame = { left: 440, top: 30, width: 290, height: 310,
                         xMin: lo, xMax: hi,
                         yMin: Math.min(...strings) / 3,
                         yMax: Math.max(...strings) * 3,
                         xLog: true, yLog: true };
  drawFrame(svg, right, "lattice size L", "max strings", "string scaling");
  xTicks(svg, right, sizes, (v) => v.toFixed(0));
  series(svg, right, sizes, strings, PALETTE[0], 2);
  const anchorS = strings[strings.length - 1];
  const refS = sizes.map((L) => anchorS * Math.pow(L / sizes[sizes.length - 1], 2));
  series(svg, right, sizes, refS, "#222", 1, "5,3");
  legend(svg, right, [["measured", PALETTE[0]], ["L^2 reference", "#222"]]);
  return svg.render();
}
