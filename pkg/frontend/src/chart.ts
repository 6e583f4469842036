/*
 * Inline SVG line chart: tc_fraction against the swept confirmation.
 *
 * Numeric strings from the wire are parsed to floats here for geometry
 * only; every visible label echoes the original string untouched.
 */

import type { SweepPoint } from "./types.js";

const WIDTH = 560;
const HEIGHT = 240;
const PAD = { top: 16, right: 16, bottom: 28, left: 64 };

const SVG_NS = "http://www.w3.org/2000/svg";

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function label(x: number, y: number, text: string, anchor = "start"): SVGElement {
  const node = el("text", {
    x: x.toFixed(1),
    y: y.toFixed(1),
    "text-anchor": anchor,
    "font-size": "11",
    class: "chart-label",
  });
  node.textContent = text;
  return node;
}

export function renderSweepChart(svg: SVGSVGElement, points: SweepPoint[]): void {
  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  if (points.length < 2) return;

  const xs = points.map((p) => Number.parseFloat(p.parameter_value));
  const ys = points.map((p) => Number.parseFloat(p.tc_fraction));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys, 0);
  const yMax = Math.max(...ys, 0);
  const xSpan = xMax - xMin || 1;
  const ySpan = yMax - yMin || 1;

  const plotW = WIDTH - PAD.left - PAD.right;
  const plotH = HEIGHT - PAD.top - PAD.bottom;
  const toX = (x: number): number => PAD.left + ((x - xMin) / xSpan) * plotW;
  const toY = (y: number): number => PAD.top + (1 - (y - yMin) / ySpan) * plotH;

  if (yMin < 0 && yMax > 0) {
    svg.append(
      el("line", {
        x1: String(PAD.left),
        y1: toY(0).toFixed(1),
        x2: String(WIDTH - PAD.right),
        y2: toY(0).toFixed(1),
        stroke: "#999",
        "stroke-dasharray": "4 3",
        class: "chart-zero",
      }),
    );
  }

  const line = points
    .map((_, i) => `${toX(xs[i] ?? 0).toFixed(1)},${toY(ys[i] ?? 0).toFixed(1)}`)
    .join(" ");
  svg.append(
    el("polyline", {
      points: line,
      fill: "none",
      stroke: "#2457a8",
      "stroke-width": "2",
      class: "chart-line",
    }),
  );

  points.forEach((point, i) => {
    const dot = el("circle", {
      cx: toX(xs[i] ?? 0).toFixed(1),
      cy: toY(ys[i] ?? 0).toFixed(1),
      r: "3",
      fill: point.implausible ? "#c0392b" : "#2457a8",
      class: "chart-dot",
    });
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `f=${point.parameter_value}: ${point.tc_fraction} (${point.tc})`;
    dot.append(title);
    svg.append(dot);
  });

  const first = points[0];
  const last = points[points.length - 1];
  if (first && last) {
    svg.append(label(PAD.left, HEIGHT - 8, first.parameter_value));
    svg.append(label(WIDTH - PAD.right, HEIGHT - 8, last.parameter_value, "end"));
  }
  const iHigh = ys.indexOf(Math.max(...ys));
  const iLow = ys.indexOf(Math.min(...ys));
  svg.append(label(4, toY(ys[iHigh] ?? 0) + 4, points[iHigh]?.tc_fraction ?? ""));
  svg.append(label(4, toY(ys[iLow] ?? 0) + 4, points[iLow]?.tc_fraction ?? ""));
}
