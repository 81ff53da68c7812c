/**
 * Minimal deterministic SVG assembly: fixed decimal formatting, no
 * timestamps, attribute order fixed by construction, so identical inputs
 * yield byte-identical files.
 */

export function fmt(value: number, digits = 2): string {
  if (!Number.isFinite(value)) return "0";
  const text = value.toFixed(digits);
  return text === "-0.00" ? "0.00" : text;
}

export class Svg {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
      `height="${height}" viewBox="0 0 ${width} ${height}" ` +
      `font-family="Helvetica,Arial,sans-serif">`);
    this.parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string,
       width = 1, dash?: string): void {
    let attrs = `x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
      `stroke="${stroke}" stroke-width="${width}"`;
    if (dash) attrs += ` stroke-dasharray="${dash}"`;
    this.parts.push(`<line ${attrs}/>`);
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5,
           dash?: string): void {
    if (points.length === 0) return;
    const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    let attrs = `points="${path}" fill="none" stroke="${stroke}" stroke-width="${width}"`;
    if (dash) attrs += ` stroke-dasharray="${dash}"`;
    this.parts.push(`<polyline ${attrs}/>`);
  }

  circle(x: number, y: number, r: number, fill: string): void {
    this.parts.push(
      `<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(r, 1)}" fill="${fill}"/>`);
  }

  text(x: number, y: number, content: string, size = 11, anchor = "start",
       fill = "#222"): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" ` +
      `text-anchor="${anchor}" fill="${fill}">${escapeXml(content)}</text>`);
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
