import { describe, expect, it } from "vitest";

import { renderSweepChart } from "../src/chart.js";
import type { SweepPoint } from "../src/types.js";

const POINTS: SweepPoint[] = [
  point("0.5000", "64000.00", "0.6400", "ProposeSettlement"),
  point("0.6000", "44000.00", "0.4400", "ProposeSettlement"),
  point("0.7000", "24000.00", "0.2400", "Litigate"),
  point("0.8000", "4000.00", "0.0400", "Litigate"),
];

function point(
  parameterValue: string,
  tc: string,
  tcFraction: string,
  plaintiffAction: string,
  implausible = false,
): SweepPoint {
  return {
    parameter_value: parameterValue,
    tc,
    tc_fraction: tcFraction,
    plaintiff_action: plaintiffAction,
    defendant_action: "ProposeSettlement",
    implausible,
  };
}

function makeSvg(): SVGSVGElement {
  return document.createElementNS("http://www.w3.org/2000/svg", "svg") as SVGSVGElement;
}

describe("renderSweepChart", () => {
  it("draws one dot per point and a single line", () => {
    const svg = makeSvg();
    renderSweepChart(svg, POINTS);
    expect(svg.querySelectorAll("polyline")).toHaveLength(1);
    expect(svg.querySelectorAll("circle")).toHaveLength(4);
  });

  it("labels the axes with wire strings verbatim", () => {
    const svg = makeSvg();
    renderSweepChart(svg, POINTS);
    const labels = [...svg.querySelectorAll("text.chart-label")].map((n) => n.textContent);
    expect(labels).toContain("0.5000");
    expect(labels).toContain("0.8000");
    expect(labels).toContain("0.6400");
    expect(labels).toContain("0.0400");
  });

  it("maps a falling tc_fraction to a descending line", () => {
    const svg = makeSvg();
    renderSweepChart(svg, POINTS);
    const raw = svg.querySelector("polyline")?.getAttribute("points") ?? "";
    const ys = raw.split(" ").map((pair) => Number.parseFloat(pair.split(",")[1] ?? ""));
    expect(ys).toHaveLength(4);
    for (let i = 1; i < ys.length; i += 1) {
      expect(ys[i]).toBeGreaterThan(ys[i - 1] ?? Number.NaN);
    }
  });

  it("marks implausible points red", () => {
    const svg = makeSvg();
    renderSweepChart(svg, [
      point("0.8000", "4000.00", "0.0400", "Litigate"),
      point("0.9000", "-16000.00", "-0.1600", "Litigate", true),
    ]);
    const fills = [...svg.querySelectorAll("circle")].map((c) => c.getAttribute("fill"));
    expect(fills).toEqual(["#2457a8", "#c0392b"]);
  });

  it("clears the chart when fewer than two points arrive", () => {
    const svg = makeSvg();
    renderSweepChart(svg, POINTS);
    expect(svg.childElementCount).toBeGreaterThan(0);
    renderSweepChart(svg, POINTS.slice(0, 1));
    expect(svg.childElementCount).toBe(0);
  });
});
