// Browser wiring: canvas over the site image, edit gestures feeding the
// session, and the savings table under the map. All numbers shown come from
// the service; this file only draws and routes events.

import { ApiClient, HttpTransport } from "./api.js";
import { buildOverlay, VariantVisibility, type VariantName } from "./overlay.js";
import type { PosePoint, Section } from "./scenario.js";
import { CalibrationRequired, InvalidEdit, UiSession } from "./session.js";
import { buildSavingsTable, TABLE_COLUMNS } from "./table.js";

type Mode =
  | { kind: "idle" }
  | { kind: "calibrate"; first: [number, number] | null }
  | { kind: "place"; target: "entry" | "exit" | "dump" }
  | { kind: "waypoint"; section: Section }
  | { kind: "reverse" };

const apiBase = (document.querySelector("meta[name=api-base]") as HTMLMetaElement | null)?.content
  ?? "http://127.0.0.1:8787";

const session = new UiSession(new ApiClient(new HttpTransport(apiBase)));
const visibility = new VariantVisibility();

const canvas = document.getElementById("map") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const statusEl = document.getElementById("status")!;
const tableEl = document.getElementById("savings") as HTMLTableElement;

let image: HTMLImageElement | null = null;
let mode: Mode = { kind: "idle" };
let pendingEntry: PosePoint | null = null;
// View transform layer: zoom/pan live here, never in the calibration math.
let viewScale = 1;
let viewX = 0;
let viewY = 0;
let dragStart: { xPx: number; yPx: number } | null = null;

function setStatus(text: string): void {
  statusEl.textContent = text;
}

function toImagePixels(ev: MouseEvent): { xPx: number; yPx: number } {
  const rect = canvas.getBoundingClientRect();
  return {
    xPx: (ev.clientX - rect.left - viewX) / viewScale,
    yPx: (ev.clientY - rect.top - viewY) / viewScale,
  };
}

function draw(): void {
  ctx.setTransform(1, 0, 0, 1, 0, 0);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.setTransform(viewScale, 0, 0, viewScale, viewX, viewY);
  if (image) ctx.drawImage(image, 0, 0);

  if (!session.lastResult || !session.isCalibrated) return;
  const overlay = buildOverlay(session.lastResult, session.scenario, visibility);

  for (const line of overlay.polylines) {
    ctx.beginPath();
    ctx.strokeStyle = line.variant === "turntable" ? "#0a7d32" : "#b3261e";
    ctx.lineWidth = 2 / viewScale;
    ctx.setLineDash(line.variant === "turntable" ? [] : [6 / viewScale, 4 / viewScale]);
    line.pointsPx.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
    ctx.stroke();
    ctx.setLineDash([]);
  }

  for (const glyph of overlay.glyphs) {
    const [x, y] = glyph.atPx;
    ctx.beginPath();
    if (glyph.kind === "turntable") {
      ctx.strokeStyle = "#0a7d32";
      ctx.arc(x, y, 8 / viewScale, 0, 2 * Math.PI);
      ctx.stroke();
    } else {
      ctx.fillStyle = "#b3261e";
      ctx.arc(x, y, 4 / viewScale, 0, 2 * Math.PI);
      ctx.fill();
    }
  }

  const badgeTexts = overlay.badges.map((b) => `${b.routeId}: ${b.code}`);
  if (badgeTexts.length > 0) setStatus(`route problems: ${badgeTexts.join(", ")}`);
}

function renderTable(): void {
  tableEl.innerHTML = "";
  if (!session.lastResult) return;
  const head = tableEl.insertRow();
  for (const col of TABLE_COLUMNS) {
    const th = document.createElement("th");
    th.textContent = col;
    head.appendChild(th);
  }
  for (const row of buildSavingsTable(session.lastResult)) {
    const tr = tableEl.insertRow();
    for (const col of TABLE_COLUMNS) {
      tr.insertCell().textContent = row.cells[col];
    }
    if (row.issues.length > 0) {
      tr.title = row.issues.join("\n");
      tr.classList.add("has-issues");
    }
  }
}

async function resolveAnd(render: Promise<unknown>): Promise<void> {
  try {
    await render;
    setStatus("solved");
  } catch (err) {
    if (session.lastServerError) {
      setStatus(`server rejected: ${session.lastServerError.message}`);
    } else {
      setStatus(String(err));
    }
  }
  renderTable();
  draw();
}

function promptLabel(kind: string): string | null {
  return window.prompt(`${kind} label`);
}

canvas.addEventListener("mousedown", (ev) => {
  dragStart = toImagePixels(ev);
});

canvas.addEventListener("mouseup", (ev) => {
  const start = dragStart;
  dragStart = null;
  if (!start) return;
  const end = toImagePixels(ev);
  const drag = { dxPx: end.xPx - start.xPx, dyPx: end.yPx - start.yPx };

  try {
    if (mode.kind === "calibrate") {
      if (mode.first === null) {
        mode = { kind: "calibrate", first: [start.xPx, start.yPx] };
        setStatus("calibration: click the second point");
        return;
      }
      const distance = Number(window.prompt("distance between the points, meters"));
      const height = image?.naturalHeight ?? canvas.height;
      session.calibrate(mode.first, [start.xPx, start.yPx], distance, height);
      mode = { kind: "idle" };
      setStatus(`calibrated: ${(session.transform().scale).toFixed(3)} m/px`);
      return;
    }

    if (mode.kind === "place") {
      const pose = session.placeDirectedPoint(start, drag);
      if (mode.target === "entry") {
        pendingEntry = pose;
        mode = { kind: "place", target: "exit" };
        setStatus("now place the matching exit (click + drag)");
      } else if (mode.target === "exit") {
        const label = promptLabel("entry/exit pair");
        if (label && pendingEntry) session.addEntryExitPair(label, pendingEntry, pose);
        pendingEntry = null;
        mode = { kind: "idle" };
      } else {
        const label = promptLabel("dump point");
        if (label) session.addDumpPoint(label, pose);
        mode = { kind: "idle" };
      }
      draw();
      return;
    }

    if (mode.kind === "waypoint") {
      const routeId = session.selection.routeId;
      if (!routeId) {
        setStatus("select a route first");
        return;
      }
      const pose = session.placeDirectedPoint(start, drag);
      void resolveAnd(session.insertWaypoint(routeId, mode.section, pose));
      mode = { kind: "idle" };
      return;
    }

    if (mode.kind === "reverse") {
      const routeId = session.selection.routeId;
      if (!routeId) {
        setStatus("select a route first");
        return;
      }
      const pose = session.placeDirectedPoint(start, drag);
      void resolveAnd(session.dragReversePoint(routeId, pose));
      mode = { kind: "idle" };
      return;
    }
  } catch (err) {
    if (err instanceof CalibrationRequired) setStatus("calibrate the image first");
    else if (err instanceof InvalidEdit) setStatus(err.message);
    else setStatus(String(err));
  }
});

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  const factor = ev.deltaY < 0 ? 1.15 : 1 / 1.15;
  const at = { x: ev.offsetX, y: ev.offsetY };
  viewX = at.x - (at.x - viewX) * factor;
  viewY = at.y - (at.y - viewY) * factor;
  viewScale *= factor;
  draw();
});

function bindButton(id: string, handler: () => void): void {
  document.getElementById(id)?.addEventListener("click", handler);
}

bindButton("btn-calibrate", () => {
  mode = { kind: "calibrate", first: null };
  setStatus("calibration: click the first point");
});
bindButton("btn-pair", () => {
  mode = { kind: "place", target: "entry" };
  setStatus("place the entry gate (click + drag along the bearing)");
});
bindButton("btn-dump", () => {
  mode = { kind: "place", target: "dump" };
  setStatus("place the dump point (drag along the departure bearing)");
});
bindButton("btn-waypoint-in", () => {
  mode = { kind: "waypoint", section: "inbound" };
  setStatus("click + drag to insert an inbound waypoint on the selected route");
});
bindButton("btn-waypoint-out", () => {
  mode = { kind: "waypoint", section: "outbound" };
  setStatus("click + drag to insert an outbound waypoint on the selected route");
});
bindButton("btn-reverse", () => {
  mode = { kind: "reverse" };
  setStatus("click + drag to move the selected route's reverse point");
});
bindButton("btn-solve", () => void resolveAnd(session.solve()));
bindButton("btn-undo", () => {
  if (session.undo()) {
    setStatus("undid last edit");
    draw();
  }
});
bindButton("btn-redo", () => {
  if (session.redo()) {
    setStatus("redid edit");
    draw();
  }
});
bindButton("btn-toggle-tt", () => {
  visibility.toggle("turntable" as VariantName);
  draw();
});
bindButton("btn-toggle-rev", () => {
  visibility.toggle("no_turntable" as VariantName);
  draw();
});

const routeSelect = document.getElementById("route-select") as HTMLSelectElement | null;
routeSelect?.addEventListener("change", () => {
  session.selectRoute(routeSelect.value || null);
});

function refreshRouteOptions(): void {
  if (!routeSelect) return;
  const current = routeSelect.value;
  routeSelect.innerHTML = "";
  for (const id of session.routeIds()) {
    const opt = document.createElement("option");
    opt.value = id;
    opt.textContent = id;
    routeSelect.appendChild(opt);
  }
  if (current) routeSelect.value = current;
  session.selectRoute(routeSelect.value || null);
}

setInterval(refreshRouteOptions, 1000);

const fileInput = document.getElementById("image-file") as HTMLInputElement | null;
fileInput?.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  const img = new Image();
  img.onload = () => {
    image = img;
    canvas.width = Math.min(img.naturalWidth, 1600);
    canvas.height = Math.min(img.naturalHeight, 1000);
    session.loadImage(file.name);
    draw();
    setStatus(`loaded ${file.name} (${img.naturalWidth}x${img.naturalHeight}px), now calibrate`);
  };
  img.src = URL.createObjectURL(file);
});

setStatus("load a site image to begin");
