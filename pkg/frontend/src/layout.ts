// Fixed circular layout by vertex index: vertex 1 on top, clockwise.
// Mutation never moves vertices, so diffs in the arrow pattern stay
// visually attributable.

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(n: number, radius = 1): Point[] {
  const out: Point[] = [];
  for (let v = 0; v < n; v += 1) {
    const theta = Math.PI / 2 - (2 * Math.PI * v) / n;
    out.push({ x: radius * Math.cos(theta), y: radius * Math.sin(theta) });
  }
  return out;
}
