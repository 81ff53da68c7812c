/** Shared axes/scale helpers on top of the SVG builder. */

import { Svg, fmt } from "./svg.js";

export interface Frame {
  left: number;
  top: number;
  width: number;
  height: number;
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
  xLog?: boolean;
  yLog?: boolean;
}

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                        "#8c564b", "#17becf"];

function toUnit(value: number, min: number, max: number, log: boolean | undefined): number {
  if (log) {
    return (Math.log10(value) - Math.log10(min)) / (Math.log10(max) - Math.log10(min));
  }
  return (value - min) / (max - min);
}

export function xPix(frame: Frame, x: number): number {
  return frame.left + frame.width * toUnit(x, frame.xMin, frame.xMax, frame.xLog);
}

export function yPix(frame: Frame, y: number): number {
  return frame.top + frame.height * (1 - toUnit(y, frame.yMin, frame.yMax, frame.yLog));
}

export function drawFrame(svg: Svg, frame: Frame, xLabel: string, yLabel: string,
                          title: string): void {
  const { left, top, width, height } = frame;
  svg.line(left, top + height, left + width, top + height, "#222");
  svg.line(left, top, left, top + height, "#222");
  svg.text(left + width / 2, top + height + 32, xLabel, 12, "middle");
  svg.text(left - 44, top + height / 2, yLabel, 12, "middle");
  svg.text(left + width / 2, top - 8, title, 13, "middle");
}

export function xTicks(svg: Svg, frame: Frame, ticks: number[],
                       label: (v: number) => string): void {
  for (const tick of ticks) {
    const px = xPix(frame, tick);
    svg.line(px, frame.top + frame.height, px, frame.top + frame.height + 5, "#222");
    svg.text(px, frame.top + frame.height + 18, label(tick), 10, "middle");
  }
}

export function yTicks(svg: Svg, frame: Frame, ticks: number[],
                       label: (v: number) => string): void {
  for (const tick of ticks) {
    const py = yPix(frame, tick);
    svg.line(frame.left - 5, py, frame.left, py, "#222");
    svg.text(frame.left - 8, py + 3, label(tick), 10, "end");
  }
}

export function legend(svg: Svg, frame: Frame, entries: Array<[string, string]>,
                       dx = 12, dy = 14): void {
  entries.forEach(([label, color], index) => {
    const y = frame.top + dy + 16 * index;
    const x = frame.left + frame.width - 150 + dx;
    svg.line(x - 10, y - 3, x + 8, y - 3, color, 2);
    svg.text(x + 12, y, label, 10);
  });
}

export function series(svg: Svg, frame: Frame, xs: number[], ys: number[],
                       color: string, width = 1.5, dash?: string): void {
  const points: Array<[number, number]> = [];
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i])) continue;
    if (frame.xLog && xs[i] <= 0) continue;
    if (frame.yLog && ys[i] <= 0) continue;
    points.push([xPix(frame, xs[i]), yPix(frame, ys[i])]);
  }
  svg.polyline(points, color, width, dash);
}

export function decadeLabel(value: number): string {
  const exp = Math.round(Math.log10(value));
  return `1e${exp}`;
}

export { fmt };
