/** Explorer wiring: catalog picker, SVG view, history and undo.
 *
 * Requests are serialized: one in flight per session, clicks during a
 * request are ignored.  Server errors surface as a toast and leave the
 * state unchanged.
 */

import { ApiError, CatalogEntry, Client, QuiverDocument } from "./api";
import { forceLayout, normalize, Point } from "./layout";
import { buildScene, orbitColor, Scene } from "./render";
import {
  applyMove,
  highlightActive,
  newSession,
  SessionState,
  statusLabel,
  undo,
} from "./session";

const client = new Client(
  (window as any).AFFOLD_SERVER ?? "http://127.0.0.1:8617",
);

let session: SessionState | null = null;
let layout: Point[] = [];
let busy = false;
let catalog: CatalogEntry[] = [];

const $ = (id: string) => document.getElementById(id)!;

function toast(message: string): void {
  const el = $("toast");
  el.textContent = message;
  el.classList.add("visible");
  setTimeout(() => el.classList.remove("visible"), 4000);
}

async function guarded(work: () => Promise<void>): Promise<void> {
  if (busy) return;
  busy = true;
  try {
    await work();
  } catch (err) {
    toast(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
  } finally {
    busy = false;
  }
}

function svgArrow(
  x1: number, y1: number, x2: number, y2: number,
  label: string, highlighted: boolean,
): string {
  const color = highlighted ? "#cc2222" : "#444444";
  const width = highlighted ? 3 : 1.5;
  const tx = (x1 + x2) / 2;
  const ty = (y1 + y2) / 2 - 6;
  const text = label
    ? `<text x="${tx}" y="${ty}" class="mult" fill="${color}">${label}</text>`
    : "";
  return (
    `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="${color}" ` +
    `stroke-width="${width}" marker-end="url(#arrow)"/>` + text
  );
}

function paint(scene: Scene): void {
  const size = 420;
  const pad = 50;
  const scale = (size - 2 * pad) / 2;
  const px = (x: number) => size / 2 + x * scale;
  const py = (y: number) => size / 2 - y * scale;

  const parts: string[] = [];
  for (const edge of scene.edges) {
    const a = scene.nodes[edge.from - 1];
    const b = scene.nodes[edge.to - 1];
    const dx = px(b.x) - px(a.x);
    const dy = py(b.y) - py(a.y);
    const len = Math.hypot(dx, dy) || 1;
    const trim = 16;
    parts.push(
      svgArrow(
        px(a.x) + (dx / len) * trim,
        py(a.y) + (dy / len) * trim,
        px(b.x) - (dx / len) * trim,
        py(b.y) - (dy / len) * trim,
        edge.label,
        edge.highlighted,
      ),
    );
  }
  for (const node of scene.nodes) {
    const stroke = node.highlighted ? "#cc2222" : "#222222";
    parts.push(
      `<circle cx="${px(node.x)}" cy="${py(node.y)}" r="13" ` +
        `fill="${orbitColor(node.orbit)}" stroke="${stroke}" ` +
        `stroke-width="${node.highlighted ? 3 : 1}" data-vertex="${node.id}" ` +
        `class="vertex"/>` +
        `<text x="${px(node.x)}" y="${py(node.y) + 4}" class="vlabel" ` +
        `data-vertex="${node.id}">${node.label}</text>`,
    );
  }
  $("view").innerHTML =
    `<svg viewBox="0 0 ${size} ${size}">` +
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
    `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
    `<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/></marker></defs>` +
    parts.join("") +
    `</svg>`;

  for (const el of document.querySelectorAll("[data-vertex]")) {
    el.addEventListener("click", () => {
      const v = Number((el as HTMLElement).dataset.vertex);
      onVertexClick(v);
    });
  }
}

function repaint(): void {
  if (!session) return;
  const scene = buildScene(session.doc, layout, session.check);
  paint(scene);
  $("status").textContent = statusLabel(session.check);
  $("status").className = session.check
    ? highlightActive(session.check)
      ? "bad"
      : "good"
    : "";
  const hist = session.history
    .map((s, i) => `${i + 1}. ${s.move.op} ${s.move.arg}`)
    .join("\n");
  $("history").textContent = hist || "(initial)";
  renderOrbitBadges(scene);
  void renderFoldedPanel();
}

function renderOrbitBadges(scene: Scene): void {
  const box = $("orbits");
  box.innerHTML = "";
  scene.orbits.forEach((orbit, idx) => {
    const badge = document.createElement("button");
    badge.textContent = `I${idx + 1} = {${orbit.join(",")}}`;
    badge.style.borderColor = orbitColor(idx);
    badge.addEventListener("click", () =>
      guarded(async () => {
        if (!session) return;
        session = await applyMove(client, session, {
          op: "orbit-mutate",
          arg: idx + 1,
        });
        repaint();
      }),
    );
    box.appendChild(badge);
  });
}

async function renderFoldedPanel(): Promise<void> {
  const panel = $("folded");
  if (!session || !session.check || !session.check.admissible) {
    panel.textContent = session?.check
      ? "not admissible: no folded quiver"
      : "";
    return;
  }
  try {
    const folded = await client.fold(session.doc);
    panel.textContent =
      "folded matrix " +
      JSON.stringify(folded.doc.b) +
      "  orbits " +
      JSON.stringify(folded.orbits);
  } catch (err) {
    panel.textContent = String(err);
  }
}

function onVertexClick(v: number): void {
  void guarded(async () => {
    if (!session) return;
    if (session.orbitMode && session.check) {
      const idx = session.check.orbits.findIndex((orb) => orb.includes(v));
      session = await applyMove(client, session, {
        op: "orbit-mutate",
        arg: idx + 1,
      });
    } else {
      session = await applyMove(client, session, { op: "mutate", arg: v });
    }
    repaint();
  });
}

async function loadCatalogEntry(name: string, group: string | null): Promise<void> {
  const entry = catalog.find((e) => e.type === name);
  if (!entry) return;
  const doc: QuiverDocument = JSON.parse(JSON.stringify(entry.doc));
  if (group) {
    const action = entry.actions.find((a) => a.group === group || a.target === group);
    if (action)
      doc.action = { group: action.group, generators: action.generators };
  }
  layout = normalize(entry.layout as Point[]);
  const check = doc.action ? await client.check(doc) : null;
  session = newSession(doc, check);
  repaint();
}

async function boot(): Promise<void> {
  catalog = await client.catalog();
  const picker = $("picker") as HTMLSelectElement;
  for (const entry of catalog) {
    const opt = document.createElement("option");
    opt.value = entry.type;
    opt.textContent = entry.type;
    picker.appendChild(opt);
  }
  picker.addEventListener("change", () =>
    guarded(async () => {
      const entry = catalog.find((e) => e.type === picker.value);
      const actionPicker = $("action-picker") as HTMLSelectElement;
      actionPicker.innerHTML = "<option value=''>(no action)</option>";
      for (const a of entry?.actions ?? []) {
        const opt = document.createElement("option");
        opt.value = a.target;
        opt.textContent = `${a.group} -> ${a.target}`;
        actionPicker.appendChild(opt);
      }
      await loadCatalogEntry(picker.value, null);
    }),
  );
  $("action-picker").addEventListener("change", () =>
    guarded(async () => {
      const actionPicker = $("action-picker") as HTMLSelectElement;
      await loadCatalogEntry(picker.value, actionPicker.value || null);
    }),
  );
  $("undo").addEventListener("click", () => {
    if (!session) return;
    session = undo(session);
    repaint();
  });
  $("orbit-mode").addEventListener("change", () => {
    if (!session) return;
    session.orbitMode = ($("orbit-mode") as HTMLInputElement).checked;
  });
  $("paste").addEventListener("click", () =>
    guarded(async () => {
      const text = prompt("paste a quiver document (JSON)");
      if (!text) return;
      const doc = JSON.parse(text) as QuiverDocument;
      layout = forceLayout(doc);
      const check = doc.action ? await client.check(doc) : null;
      session = newSession(doc, check);
      repaint();
    }),
  );
  await loadCatalogEntry("E~6", "Z3");
  const actionPicker = $("action-picker") as HTMLSelectElement;
  actionPicker.innerHTML =
    "<option value=''>(no action)</option><option selected>G~2</option>";
}

void boot();
