import { TelemetryQueue } from "./telemetry.js";

export type ChartKind = "density" | "dotplot";

/**
 * Switches between the density and dot plot. When the density is absent
 * (zero-variance trial) the control is disabled with a hint and toggling
 * is a no-op.
 */
export class VisualizationToggle {
  private current: ChartKind;

  constructor(
    private readonly density: SVGSVGElement | null,
    private readonly dotplot: SVGSVGElement,
    private readonly button: HTMLButtonElement,
    private readonly telemetry: TelemetryQueue,
  ) {
    this.current = density ? "density" : "dotplot";
    if (!density) {
      button.disabled = true;
      button.title = "Only the dot plot is available for this forecast.";
    }
    button.addEventListener("click", () => this.toggle());
    this.apply();
  }

  get visible(): ChartKind {
    return this.current;
  }

  toggle(): ChartKind {
    if (!this.density) {
      return this.current;
    }
    this.current = this.current === "density" ? "dotplot" : "density";
    this.apply();
    this.telemetry.send("vis_toggle", this.current);
    return this.current;
  }

  private apply(): void {
    if (this.density) {
      this.density.classList.toggle("chart-hidden", this.current !== "density");
    }
    this.dotplot.classList.toggle("chart-hidden", this.current !== "dotplot");
    this.button.textContent =
      this.current === "density" ? "Show dot plot" : "Show density plot";
  }
}
