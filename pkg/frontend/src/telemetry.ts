import type {
  InterfaceMode,
  TelemetryEvent,
  TelemetryKind,
  TelemetryTarget,
} from "./types.js";

export type PostFn = (event: TelemetryEvent) => Promise<void>;

export function httpPoster(url = "/api/telemetry"): PostFn {
  return async (event) => {
    const response = await fetch(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(event),
    });
    if (!response.ok) {
      throw new Error(`telemetry post failed with ${response.status}`);
    }
  };
}

/**
 * Fire-and-forget event poster. Failed posts are queued locally and
 * retried (in order) ahead of the next send.
 */
export class TelemetryQueue {
  private pending: TelemetryEvent[] = [];
  private flushing: Promise<void> = Promise.resolve();

  constructor(
    private readonly post: PostFn,
    private readonly sessionId: string,
    private readonly mode: InterfaceMode,
    private readonly now: () => number = Date.now,
  ) {}

  send(kind: TelemetryKind, target: TelemetryTarget = "none", value = ""): void {
    const event: TelemetryEvent = {
      session_id: this.sessionId,
      interface_mode: this.mode,
      kind,
      target,
      value,
      at_ms: this.now(),
    };
    this.flushing = this.flushing.then(() => this.flush(event));
  }

  get pendingCount(): number {
    return this.pending.length;
  }

  /** Resolves once every send issued so far has been attempted. */
  async settle(): Promise<void> {
    await this.flushing;
  }

  private async flush(event: TelemetryEvent): Promise<void> {
    const batch = [...this.pending, event];
    this.pending = [];
    for (const queued of batch) {
      try {
        await this.post(queued);
      } catch {
        this.pending.push(queued);
      }
    }
  }
}
