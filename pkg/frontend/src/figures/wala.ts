/**
 * Loop-ansatz plaquette panel: the swept plaquette expectation for the two
 * circuit variants (`scan --circuit wala --obs plaquette:N` schema), with
 * the (sin 2t)^5 closed form of the gate-free plaquette overlaid.
 */

import { Table, okRows, requireColumns } from "../csv.js";
import { grid, plaquetteNoPt } from "../analytic.js";
import { Svg } from "../svg.js";
import { Frame, PALETTE, drawFrame, legend, series, xTicks, yTicks } from "../plot.js";

export function render(inputs: Table[]): string {
  if (inputs.length === 0) {
    throw new Error("wala figure needs at least one plaquette CSV");
  }
  const svg = new Svg(640, 420);
  const frame: Frame = { left: 70, top: 30, width: 520, height: 330,
                         xMin: 0, xMax: 1.58, yMin: -0.05, yMax: 1.05 };
  drawFrame(svg, frame, "loop angle (rad)", "plaquette expectation",
            "plaquette sweep on the cube");
  xTicks(svg, frame, [0, 0.785, 1.571], (v) => v.toFixed(2));
  yTicks(svg, frame, [0, 0.5, 1], (v) => v.toFixed(1));

  const entries: Array<[string, string]> = [];
  inputs.forEach((table, index) => {
    requireColumns(table, ["theta", "value"], `wala input ${index + 1}`);
    const rows = okRows(table);
    const color = PALETTE[index % PALETTE.length];
    series(svg, frame, rows.map((r) => Number(r.theta)),
           rows.map((r) => Number(r.value)), color);
    const variant = table.metadata["circuit"] === "wala"
      ? (table.metadata["obs"] ?? "plaquette") : "plaquette";
    entries.push([`input ${index + 1}: ${variant}`, color]);
  });

  const thetas = grid(0, 1.5708, 301);
  series(svg, frame, thetas, thetas.map(plaquetteNoPt), "#222", 1.2, "5,3");
  entries.push(["(sin 2t)^5", "#222"]);
  legend(svg, frame, entries);
  return svg.render();
}
