/** Session state and transitions for the explorer.
 *
 * All math comes from the service; this module only tracks documents,
 * history and cached check results.  Replaying `history` from
 * `initialDoc` through the service reproduces `doc` exactly.
 */

import { CheckResult, Client, QuiverDocument } from "./api";

export type Move =
  | { op: "mutate"; arg: number }
  | { op: "orbit-mutate"; arg: number };

export interface Step {
  move: Move;
  doc: QuiverDocument;
  check: CheckResult | null;
}

export interface SessionState {
  initialDoc: QuiverDocument;
  initialCheck: CheckResult | null;
  doc: QuiverDocument;
  check: CheckResult | null;
  history: Step[];
  orbitMode: boolean;
}

export function newSession(
  doc: QuiverDocument,
  check: CheckResult | null,
): SessionState {
  return {
    initialDoc: doc,
    initialCheck: check,
    doc,
    check,
    history: [],
    orbitMode: false,
  };
}

function hasAction(doc: QuiverDocument): boolean {
  return doc.action != null && doc.action.generators.length > 0;
}

/** Apply one move through the service; on failure the state is unchanged. */
export async function applyMove(
  client: Client,
  state: SessionState,
  move: Move,
): Promise<SessionState> {
  const next =
    move.op === "mutate"
      ? await client.mutate(state.doc, move.arg)
      : await client.orbitMutate(state.doc, move.arg);
  const check = hasAction(next) ? await client.check(next) : null;
  return {
    ...state,
    doc: next,
    check,
    history: [...state.history, { move, doc: next, check }],
  };
}

/** Undo: pop one step; the document is exactly the previous one. */
export function undo(state: SessionState): SessionState {
  if (state.history.length === 0) return state;
  const history = state.history.slice(0, -1);
  const prev = history[history.length - 1];
  return {
    ...state,
    history,
    doc: prev ? prev.doc : state.initialDoc,
    check: prev ? prev.check : state.initialCheck,
  };
}

/** The one-line status derived from the cached check. */
export function statusLabel(check: CheckResult | null): string {
  if (!check) return "no action loaded";
  if (check.admissible) return "invariant + admissible";
  if (check.invariant) return "invariant, NOT admissible";
  return "not invariant";
}

/** Witness highlighting is active exactly when the check failed. */
export function highlightActive(check: CheckResult | null): boolean {
  return check != null && !check.admissible;
}

/** Vertices to emphasize: the witness pair/triple when one exists. */
export function highlightedVertices(check: CheckResult | null): number[] {
  if (!highlightActive(check) || !check || !check.witness) return [];
  return check.witness;
}

/** Replay the whole history against the service and compare documents. */
export async function replayMatches(
  client: Client,
  state: SessionState,
): Promise<boolean> {
  let doc = state.initialDoc;
  for (const step of state.history) {
    doc =
      step.move.op === "mutate"
        ? await client.mutate(doc, step.move.arg)
        : await client.orbitMutate(doc, step.move.arg);
    if (JSON.stringify(doc) !== JSON.stringify(step.doc)) return false;
  }
  return JSON.stringify(doc) === JSON.stringify(state.doc);
}
