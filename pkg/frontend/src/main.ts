import { buildInterface, fetchBundle } from "./app.js";
import { httpPoster, TelemetryQueue } from "./telemetry.js";
import type { InterfaceMode } from "./types.js";

function sessionId(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
    return crypto.randomUUID();
  }
  return `s-${Date.now()}-${Math.floor(Math.random() * 1e9)}`;
}

/** Load a bundle and assemble the page; errors become a banner, never a crash. */
export async function boot(root: HTMLElement | null = document.getElementById("app")): Promise<void> {
  if (!root) {
    return;
  }
  const params = new URLSearchParams(window.location.search);
  // ?mode=active|passive selects the interface; studies script this.
  const mode: InterfaceMode = params.get("mode") === "active" ? "active" : "passive";
  const seedParam = params.get("seed");
  const seed = seedParam === null ? null : Number(seedParam);

  try {
    const bundle = await fetchBundle(seed);
    const telemetry = new TelemetryQueue(httpPoster(), sessionId(), mode);
    buildInterface(root, bundle, mode, telemetry);
  } catch (error) {
    const banner = document.createElement("p");
    banner.className = "error-banner";
    banner.textContent = `Could not load the forecast: ${String(error)}`;
    root.replaceChildren(banner);
  }
}

void boot();
