/** Scene construction: pure data describing what to draw.
 *
 * Multi-arrows carry multiplicity labels, orbit members share a color, and
 * the witness highlighting follows the last check result.  The DOM layer in
 * main.ts renders a Scene; tests exercise this module directly.
 */

import { CheckResult, QuiverDocument } from "./api";
import { Point } from "./layout";
import { highlightActive, highlightedVertices } from "./session";

export interface SceneNode {
  id: number; // 1-based vertex id
  x: number;
  y: number;
  label: string;
  orbit: number | null; // orbit index (color group), when an action exists
  highlighted: boolean;
}

export interface SceneEdge {
  from: number;
  to: number;
  label: string; // multiplicity label, "" when a single arrow
  highlighted: boolean;
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  violation: boolean; // red state: check reported admissible=false
  orbits: number[][];
}

function orbitsOf(doc: QuiverDocument, check: CheckResult | null): number[][] {
  if (check) return check.orbits;
  if (!doc.action) return [];
  // derive orbits from the generators (1-based)
  const n = doc.n;
  const parent = Array.from({ length: n + 1 }, (_, i) => i);
  const find = (v: number): number =>
    parent[v] === v ? v : (parent[v] = find(parent[v]));
  for (const gen of doc.action.generators)
    for (let v = 1; v <= n; v++) {
      const a = find(v);
      const b = find(gen[v - 1]);
      if (a !== b) parent[a] = b;
    }
  const groups = new Map<number, number[]>();
  for (let v = 1; v <= n; v++) {
    const root = find(v);
    if (!groups.has(root)) groups.set(root, []);
    groups.get(root)!.push(v);
  }
  return [...groups.values()].sort((a, b) => a[0] - b[0]);
}

export function buildScene(
  doc: QuiverDocument,
  layout: Point[],
  check: CheckResult | null,
): Scene {
  const orbits = orbitsOf(doc, check);
  const orbitOf = new Map<number, number>();
  orbits.forEach((orbit, idx) => orbit.forEach((v) => orbitOf.set(v, idx)));

  const violation = highlightActive(check);
  const marked = new Set(highlightedVertices(check));

  const nodes: SceneNode[] = [];
  for (let v = 1; v <= doc.n; v++) {
    nodes.push({
      id: v,
      x: layout[v - 1][0],
      y: layout[v - 1][1],
      label: doc.names ? doc.names[v - 1] : String(v),
      orbit: orbitOf.has(v) ? orbitOf.get(v)! : null,
      highlighted: violation && (marked.size === 0 || marked.has(v)),
    });
  }

  const edges: SceneEdge[] = [];
  for (let i = 0; i < doc.n; i++)
    for (let j = 0; j < doc.n; j++) {
      const forward = doc.b[i][j];
      if (forward <= 0) continue;
      const backward = -doc.b[j][i];
      const label =
        forward === 1 && backward === 1
          ? ""
          : forward === backward
            ? String(forward)
            : `${forward},${backward}`;
      const highlighted =
        violation && marked.size > 0 && marked.has(i + 1) && marked.has(j + 1);
      edges.push({ from: i + 1, to: j + 1, label, highlighted });
    }
  return { nodes, edges, violation, orbits };
}

/** Orbit color palette: same orbit, same color. */
export function orbitColor(orbit: number | null): string {
  if (orbit === null) return "#888888";
  const palette = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
    "#bbbbbb", "#000000",
  ];
  return palette[orbit % palette.length];
}
