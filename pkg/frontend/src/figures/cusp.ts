/**
 * Energy-density cusp panel: finite-size sweeps of the nearest-neighbor ZZ
 * value (one CSV per lattice size, `scan --obs zz` schema) converging onto
 * the closed-form curve with its cusps at +-pi/4.
 */

import { Table, numericColumn, okRows, requireColumns } from "../csv.js";
import { energyDensity, grid } from "../analytic.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length === 0) {
    throw new Error("cusp figure needs at least one scan CSV");
  }
  const svg = new Svg(640, 420);
  const frame: Frame = { left: 70, top: 30, width: 520, height: 330,
                         xMin: -1.5, xMax: 1.5, yMin: -1.05, yMax: 1.05 };
  drawFrame(svg, frame, "whip angle (rad)", "energy density", "energy cusp");
  xTicks(svg, frame, [-1.5, -0.785, 0, 0.785, 1.5], (v) => v.toFixed(2));
  yTicks(svg, frame, [-1, -0.5, 0, 0.5, 1], (v) => v.toFixed(1));

  const entries: Array<[string, string]> = [];
  inputs.forEach((table, index) => {
    requireColumns(table, ["theta", "value", "energy_density", "L"],
                   `cusp input ${index + 1}`);
    const rows = okRows(table);
    const thetas = rows.map((r) => Number(r.theta));
    const energies = rows.map((r) => Number(r.energy_density));
    const color = PALETTE[index % PALETTE.length];
    series(svg, frame, thetas, energies, color);
    entries.push([`L = ${rows[0].L}`, color]);
  });

  const thetas = grid(-1.5, 1.5, 601);
  series(svg, frame, thetas, thetas.map(energyDensity), "#222", 1.2, "5,3");
  entries.push(["closed form", "#222"]);
  legend(svg, frame, entries);
  return svg.render();
}
