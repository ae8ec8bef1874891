/** Vertex placement: fixed catalog layouts, force-directed fallback. */

import { QuiverDocument } from "./api";

export type Point = [number, number];

/** Simple spring embedding for pasted documents without a catalog layout. */
export function forceLayout(doc: QuiverDocument, iterations = 300): Point[] {
  const n = doc.n;
  if (n === 1) return [[0, 0]];
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    pos.push([Math.cos(angle), Math.sin(angle)]);
  }
  const adjacent = (i: number, j: number) => doc.b[i][j] !== 0;
  const step = 0.05;
  for (let it = 0; it < iterations; it++) {
    const force: Point[] = pos.map(() => [0, 0]);
    for (let i = 0; i < n; i++)
      for (let j = 0; j < n; j++) {
        if (i === j) continue;
        const dx = pos[j][0] - pos[i][0];
        const dy = pos[j][1] - pos[i][1];
        const dist = Math.max(Math.hypot(dx, dy), 1e-3);
        // unit repulsion, spring toward unit length on edges
        let f = -0.2 / (dist * dist);
        if (adjacent(i, j)) f += (dist - 1) * 0.8;
        force[i][0] += (f * dx) / dist;
        force[i][1] += (f * dy) / dist;
      }
    for (let i = 0; i < n; i++) {
      pos[i][0] += step * force[i][0];
      pos[i][1] += step * force[i][1];
    }
  }
  return normalize(pos);
}

export function normalize(pos: Point[]): Point[] {
  const xs = pos.map((p) => p[0]);
  const ys = pos.map((p) => p[1]);
  const cx = (Math.min(...xs) + Math.max(...xs)) / 2;
  const cy = (Math.min(...ys) + Math.max(...ys)) / 2;
  const span = Math.max(
    Math.max(...xs) - Math.min(...xs),
    Math.max(...ys) - Math.min(...ys),
    1e-6,
  );
  return pos.map(([x, y]) => [((x - cx) * 2) / span, ((y - cy) * 2) / span]);
}
