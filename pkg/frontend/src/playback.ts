import type { TimingEntry } from "./types.js";

export interface PlaybackState {
  elapsedS: number;
  playing: boolean;
  currentSentence: number; // greatest entry with start_s <= elapsed, -1 before the first
}

export function currentSentenceIndex(entries: TimingEntry[], elapsedS: number): number {
  let current = -1;
  for (const entry of entries) {
    if (entry.start_s <= elapsedS) {
      current = entry.sentence_index;
    } else {
      break;
    }
  }
  return current;
}

export interface ClockOptions {
  /** Tick period; half the 100 ms stage-reveal budget by default. */
  tickMs?: number;
  /** When an audio element exists its currentTime is authoritative. */
  audio?: { currentTime: number } | null;
  onStage?: (sentenceIndex: number) => void;
  onFinish?: () => void;
}

/**
 * Drives staged reveals from the timing manifest. Without audio the clock
 * is a plain timer; with audio it follows the element's playback position.
 */
export class PlaybackClock {
  private readonly entries: TimingEntry[];
  private readonly tickMs: number;
  private readonly audio: { currentTime: number } | null;
  private readonly onStage: (sentenceIndex: number) => void;
  private readonly onFinish: () => void;

  private elapsedS = 0;
  private revealed = -1;
  private timer: ReturnType<typeof setInterval> | null = null;
  private startedOnce = false;

  constructor(entries: TimingEntry[], options: ClockOptions = {}) {
    this.entries = entries;
    this.tickMs = options.tickMs ?? 50;
    this.audio = options.audio ?? null;
    this.onStage = options.onStage ?? (() => {});
    this.onFinish = options.onFinish ?? (() => {});
  }

  get state(): PlaybackState {
    return {
      elapsedS: this.elapsedS,
      playing: this.timer !== null,
      currentSentence: currentSentenceIndex(this.entries, this.elapsedS),
    };
  }

  get hasStarted(): boolean {
    return this.startedOnce;
  }

  play(): void {
    if (this.timer !== null || this.entries.length === 0) {
      return;
    }
    this.startedOnce = true;
    this.emitStages(); // sentence 0 starts at 0, reveal immediately
    this.timer = setInterval(() => this.tick(), this.tickMs);
  }

  replay(): void {
    this.stop();
    this.elapsedS = 0;
    this.revealed = -1;
    if (this.audio) {
      this.audio.currentTime = 0;
    }
    this.play();
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  private tick(): void {
    if (this.audio) {
      this.elapsedS = this.audio.currentTime;
    } else {
      this.elapsedS += this.tickMs / 1000;
    }
    this.emitStages();
    const last = this.entries[this.entries.length - 1];
    if (this.elapsedS >= last.end_s) {
      this.stop();
      this.onFinish();
    }
  }

  private emitStages(): void {
    const current = currentSentenceIndex(this.entries, this.elapsedS);
    while (this.revealed < current) {
      this.revealed += 1;
      this.onStage(this.revealed);
    }
  }
}
