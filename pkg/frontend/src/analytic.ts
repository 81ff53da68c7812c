/** Infinite-volume closed forms drawn as overlays on the data panels. */

export function zzClosedForm(theta: number): number {
  const s2 = Math.sin(2 * theta);
  const c2 = Math.cos(2 * theta);
  return -s2 / (1 + Math.abs(c2));
}

export function energyDensity(theta: number): number {
  return -zzClosedForm(theta);
}

export function orderParameter(theta: number): number {
  const c2 = Math.cos(2 * theta);
  if (c2 <= 0) return 0;
  return (c2 + Math.abs(c2)) / (2 * Math.cos(theta));
}

export function plaquetteNoPt(theta: number): number {
  return Math.pow(Math.sin(2 * theta), 5);
}

export function truncationErrorModel(theta: number, cutoff: number): number {
  const s2 = Math.abs(Math.sin(2 * theta));
  if (s2 >= 1) return 1 / Math.sqrt(cutoff);
  if (s2 === 0) return 0;
  return Math.pow(s2, 2 * cutoff - 1) / (-Math.pow(cutoff, 1.5) * Math.log(s2));
}

export function grid(min: number, max: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    out.push(min + ((max - min) * i) / (count - 1));
  }
  return out;
}
