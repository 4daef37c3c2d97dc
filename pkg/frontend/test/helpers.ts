import rawBundle from "./fixtures/bundle.json";
import rawDegenerate from "./fixtures/bundle_degenerate.json";
import { TelemetryQueue } from "../src/telemetry.js";
import type { ForecastBundle, InterfaceMode, TelemetryEvent } from "../src/types.js";

export function fixtureBundle(): ForecastBundle {
  return JSON.parse(JSON.stringify(rawBundle)) as ForecastBundle;
}

export function degenerateBundle(): ForecastBundle {
  return JSON.parse(JSON.stringify(rawDegenerate)) as ForecastBundle;
}

export interface TelemetryRecorder {
  queue: TelemetryQueue;
  events: TelemetryEvent[];
  settle: () => Promise<void>;
}

export function makeTelemetry(mode: InterfaceMode = "active"): TelemetryRecorder {
  const events: TelemetryEvent[] = [];
  const queue = new TelemetryQueue(
    async (event) => {
      events.push(event);
    },
    "test-session",
    mode,
    () => 1000,
  );
  return { queue, events, settle: () => queue.settle() };
}

export function mouse(type: string): MouseEvent {
  return new MouseEvent(type, { bubbles: true, cancelable: true });
}

export function freshRoot(): HTMLElement {
  document.body.innerHTML = "";
  const root = document.createElement("main");
  root.id = "app";
  document.body.appendChild(root);
  return root;
}
