import { TelemetryQueue } from "./telemetry.js";

export type Choice = "salt" | "no_salt";

/**
 * The salting decision form: blocked until playback has started at least
 * once, accepts exactly one submission, and posts decision + confidence
 * telemetry on success.
 */
export class DecisionForm {
  private submitted = false;
  private playbackStarted = false;

  constructor(
    private readonly telemetry: TelemetryQueue,
    private readonly hint: HTMLElement | null = null,
    private readonly controls: { disabled: boolean }[] = [],
  ) {}

  notifyPlaybackStarted(): void {
    this.playbackStarted = true;
    this.setHint("");
  }

  get locked(): boolean {
    return this.submitted;
  }

  submit(choice: Choice, confidence: number): boolean {
    if (!this.playbackStarted) {
      this.setHint("Play the forecast before deciding.");
      return false;
    }
    if (this.submitted) {
      return false;
    }
    if (!Number.isFinite(confidence) || confidence < 0 || confidence > 100) {
      this.setHint("Confidence must be between 0 and 100.");
      return false;
    }
    this.submitted = true;
    this.telemetry.send("decision", "none", choice);
    this.telemetry.send("confidence", "none", String(Math.round(confidence)));
    for (const control of this.controls) {
      control.disabled = true;
    }
    this.setHint("Decision recorded, thank you.");
    return true;
  }

  private setHint(text: string): void {
    if (this.hint) {
      this.hint.textContent = text;
    }
  }
}
