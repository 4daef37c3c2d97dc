import { highlightBin } from "./charts.js";
import { cumulativeElement, iconArrayElement, Tooltip } from "./tooltip.js";
import type { ForecastBundle, TelemetryTarget } from "./types.js";
import { TelemetryQueue } from "./telemetry.js";

export interface HoverCharts {
  dotplot: SVGSVGElement;
  density: SVGSVGElement | null;
}

function pointer(event: Event): [number, number] {
  const mouse = event as MouseEvent;
  return [mouse.clientX ?? 0, mouse.clientY ?? 0];
}

/**
 * Wire the active interface's three hover interactions: hedges wobble and
 * blur, numbers raise an icon-array tooltip and highlight their chart
 * region, chart marks raise the cumulative at-or-below tooltip. Every
 * affordance is tagged with data-hover; passive mode never calls this, so
 * passive documents carry zero data-hover attributes.
 */
export function wireHoverInteractions(
  root: HTMLElement,
  bundle: ForecastBundle,
  telemetry: TelemetryQueue,
  tooltip: Tooltip,
  charts: HoverCharts,
): string[] {
  wireHedges(root, bundle, telemetry);
  wireNumbers(root, bundle, telemetry, tooltip, charts);
  wireChart(charts.dotplot, "dotplot", bundle, telemetry, tooltip);
  if (charts.density) {
    wireChart(charts.density, "density", bundle, telemetry, tooltip);
  }
  return ["hedge", "number", "chart"];
}

function wireHedges(root: HTMLElement, bundle: ForecastBundle, telemetry: TelemetryQueue): void {
  const effect = bundle.style.hedge_effect;
  for (const hedge of root.querySelectorAll<HTMLElement>(".span-hedge")) {
    hedge.dataset.hover = "hedge";
    hedge.addEventListener("mouseenter", () => {
      hedge.style.filter = `blur(${effect.blur_px}px)`;
      hedge.style.transform = `rotate(${effect.wobble_deg}deg)`;
      hedge.classList.add("wobbling");
      telemetry.send("hover_start", "hedge", hedge.textContent ?? "");
    });
    hedge.addEventListener("mouseleave", () => {
      hedge.style.filter = "";
      hedge.style.transform = "";
      hedge.classList.remove("wobbling");
      telemetry.send("hover_end", "hedge", hedge.textContent ?? "");
    });
  }
}

function wireNumbers(
  root: HTMLElement,
  bundle: ForecastBundle,
  telemetry: TelemetryQueue,
  tooltip: Tooltip,
  charts: HoverCharts,
): void {
  for (const number of root.querySelectorAll<HTMLElement>(".span-number")) {
    number.dataset.hover = "number";
    const value = Number(number.dataset.value);
    const payload = bundle.interaction_tables.per_number.find((p) => p.value === value);
    if (!payload) {
      continue; // a bundle violating "no dangling interactions" stays inert
    }
    number.addEventListener("mouseenter", (event) => {
      const [x, y] = pointer(event);
      tooltip.show(iconArrayElement(payload.icon_array), x, y);
      highlightBin(charts.dotplot, payload.bin_index);
      if (charts.density) {
        highlightBin(charts.density, payload.bin_index);
      }
      telemetry.send("hover_start", "number", number.textContent ?? "");
    });
    number.addEventListener("mouseleave", () => {
      tooltip.hide();
      highlightBin(charts.dotplot, null);
      if (charts.density) {
        highlightBin(charts.density, null);
      }
      telemetry.send("hover_end", "number", number.textContent ?? "");
    });
  }
}

function wireChart(
  svg: SVGSVGElement,
  target: TelemetryTarget & ("dotplot" | "density"),
  bundle: ForecastBundle,
  telemetry: TelemetryQueue,
  tooltip: Tooltip,
): void {
  svg.dataset.hover = "chart";
  // Delegated: marks are dots (dot plot) or per-bin strips (density).
  svg.addEventListener("mouseover", (event) => {
    const mark = (event.target as Element | null)?.closest<SVGElement>("[data-bin-index]");
    if (!mark || !svg.contains(mark)) {
      return;
    }
    const bin = Number(mark.dataset.binIndex);
    const payload = bundle.interaction_tables.per_bin[bin];
    if (!payload) {
      return;
    }
    const [x, y] = pointer(event);
    tooltip.show(cumulativeElement(payload.cumulative), x, y);
    telemetry.send("hover_start", target, String(payload.cumulative.threshold_f));
  });
  svg.addEventListener("mouseout", (event) => {
    const mark = (event.target as Element | null)?.closest<SVGElement>("[data-bin-index]");
    if (!mark) {
      return;
    }
    tooltip.hide();
    telemetry.send("hover_end", target, "");
  });
}
