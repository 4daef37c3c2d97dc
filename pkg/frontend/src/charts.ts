import type { DensitySpec, DotPlotSpec, Interval } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 280;
const MARGIN = { top: 12, right: 12, bottom: 28, left: 12 };

function xScale(domain: Interval): (v: number) => number {
  const span = domain.hi - domain.lo;
  return (v) => MARGIN.left + ((v - domain.lo) / span) * (WIDTH - MARGIN.left - MARGIN.right);
}

function makeSvg(kind: string): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", `chart chart-${kind}`);
  svg.dataset.chart = kind;
  return svg;
}

function axisLabels(svg: SVGSVGElement, domain: Interval): void {
  const scale = xScale(domain);
  const step = (domain.hi - domain.lo) / 4;
  for (let i = 0; i <= 4; i++) {
    const v = domain.lo + i * step;
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(scale(v)));
    label.setAttribute("y", String(HEIGHT - 8));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "axis-label");
    label.textContent = `${Math.round(v * 10) / 10}°F`;
    svg.appendChild(label);
  }
}

/**
 * Dot plot: one circle per quantile dot, stacked inside its bin. Dots carry
 * data-bin-index / data-quantile-index so hover code can look payloads up.
 */
export function renderDotPlot(spec: DotPlotSpec): SVGSVGElement {
  const svg = makeSvg("dotplot");
  const scale = xScale(spec.domain);
  const counts = new Array(spec.bins.length).fill(0);
  for (const dot of spec.dots) {
    counts[dot.bin_index] += 1;
  }
  const tallest = Math.max(...counts, 1);
  const plotHeight = HEIGHT - MARGIN.top - MARGIN.bottom;
  const radius = Math.min(
    (WIDTH - MARGIN.left - MARGIN.right) / spec.bins.length / 2 - 1,
    plotHeight / tallest / 2,
  );

  for (const dot of spec.dots) {
    const bin = spec.bins[dot.bin_index];
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(scale((bin.lo + bin.hi) / 2)));
    circle.setAttribute(
      "cy",
      String(HEIGHT - MARGIN.bottom - radius - dot.stack_position * radius * 2),
    );
    circle.setAttribute("r", String(Math.max(radius - 0.5, 1)));
    circle.setAttribute("class", "dot");
    circle.dataset.binIndex = String(dot.bin_index);
    circle.dataset.quantileIndex = String(dot.quantile_index);
    svg.appendChild(circle);
  }
  axisLabels(svg, spec.domain);
  return svg;
}

/**
 * Density plot: the KDE curve plus one invisible hover strip per bin so
 * the cumulative tooltip works over the continuous chart too.
 */
export function renderDensity(spec: DensitySpec, dotplot: DotPlotSpec): SVGSVGElement {
  const svg = makeSvg("density");
  const domain = dotplot.domain;
  const scale = xScale(domain);
  const peak = Math.max(...spec.density, Number.MIN_VALUE);
  const plotHeight = HEIGHT - MARGIN.top - MARGIN.bottom;

  const points = spec.grid.map((g, i) => {
    const x = scale(g);
    const y = HEIGHT - MARGIN.bottom - (spec.density[i] / peak) * plotHeight;
    return `${x},${y}`;
  });
  const area = document.createElementNS(SVG_NS, "polygon");
  area.setAttribute(
    "points",
    `${scale(domain.lo)},${HEIGHT - MARGIN.bottom} ${points.join(" ")} ` +
      `${scale(domain.hi)},${HEIGHT - MARGIN.bottom}`,
  );
  area.setAttribute("class", "density-area");
  svg.appendChild(area);

  const curve = document.createElementNS(SVG_NS, "polyline");
  curve.setAttribute("points", points.join(" "));
  curve.setAttribute("class", "density-curve");
  curve.setAttribute("fill", "none");
  svg.appendChild(curve);

  dotplot.bins.forEach((bin, index) => {
    const strip = document.createElementNS(SVG_NS, "rect");
    strip.setAttribute("x", String(scale(bin.lo)));
    strip.setAttribute("y", String(MARGIN.top));
    strip.setAttribute("width", String(scale(bin.hi) - scale(bin.lo)));
    strip.setAttribute("height", String(plotHeight));
    strip.setAttribute("class", "density-strip");
    strip.setAttribute("fill", "transparent");
    strip.dataset.binIndex = String(index);
    svg.appendChild(strip);
  });
  axisLabels(svg, domain);
  return svg;
}

/** Clear with null, otherwise mark every dot of the bin highlighted. */
export function highlightBin(svg: SVGSVGElement, binIndex: number | null): void {
  for (const el of svg.querySelectorAll<SVGElement>("[data-bin-index]")) {
    const match = binIndex !== null && el.dataset.binIndex === String(binIndex);
    el.classList.toggle("highlighted", match);
    el.classList.toggle("wobbling", match);
  }
}

/**
 * Staged composition: stage k (0-based of n) reveals the leading
 * (k+1)/n share of quantile dots and the matching slice of the density.
 */
export function setChartStage(svg: SVGSVGElement, stage: number, totalStages: number): void {
  const fraction = Math.min((stage + 1) / Math.max(totalStages, 1), 1);
  for (const el of svg.querySelectorAll<SVGElement>(".dot")) {
    const q = Number(el.dataset.quantileIndex ?? "0");
    el.classList.toggle("stage-hidden", q > fraction * 100);
  }
  for (const el of svg.querySelectorAll<SVGElement>(".density-curve, .density-area")) {
    el.classList.toggle("stage-hidden", false);
    (el as SVGGraphicsElement).style.clipPath = `inset(0 ${(1 - fraction) * 100}% 0 0)`;
  }
}
