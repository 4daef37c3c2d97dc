import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { buildInterface } from "../src/app.js";
import { currentSentenceIndex, PlaybackClock } from "../src/playback.js";
import type { TimingEntry } from "../src/types.js";
import { degenerateBundle, fixtureBundle, freshRoot, makeTelemetry } from "./helpers.js";

const TWO_SENTENCES: TimingEntry[] = [
  { sentence_index: 0, start_s: 0.0, end_s: 2.0 },
  { sentence_index: 1, start_s: 2.35, end_s: 4.35 },
];

describe("currentSentenceIndex", () => {
  it("returns the greatest entry whose start has passed", () => {
    expect(currentSentenceIndex(TWO_SENTENCES, 2.4)).toBe(1);
    expect(currentSentenceIndex(TWO_SENTENCES, 0.0)).toBe(0);
    expect(currentSentenceIndex(TWO_SENTENCES, 2.35)).toBe(1);
    expect(currentSentenceIndex(TWO_SENTENCES, -0.5)).toBe(-1);
  });
});

describe("PlaybackClock", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("emits stages as time passes and finishes at the end", () => {
    const stages: number[] = [];
    let finished = false;
    const clock = new PlaybackClock(TWO_SENTENCES, {
      tickMs: 50,
      onStage: (i) => stages.push(i),
      onFinish: () => {
        finished = true;
      },
    });
    clock.play();
    expect(stages).toEqual([0]);
    vi.advanceTimersByTime(2400);
    expect(stages).toEqual([0, 1]);
    vi.advanceTimersByTime(2500);
    expect(finished).toBe(true);
    expect(clock.state.playing).toBe(false);
  });

  it("replay resets to zero and replays every stage", () => {
    const stages: number[] = [];
    const clock = new PlaybackClock(TWO_SENTENCES, { tickMs: 50, onStage: (i) => stages.push(i) });
    clock.play();
    vi.advanceTimersByTime(3000);
    clock.replay();
    expect(clock.state.elapsedS).toBe(0);
    vi.advanceTimersByTime(2400);
    expect(stages).toEqual([0, 1, 0, 1]);
  });

  it("follows the audio element's time when one exists", () => {
    const audio = { currentTime: 0 };
    const stages: number[] = [];
    const clock = new PlaybackClock(TWO_SENTENCES, {
      tickMs: 50,
      audio,
      onStage: (i) => stages.push(i),
    });
    clock.play();
    audio.currentTime = 2.4;
    vi.advanceTimersByTime(50);
    expect(stages).toEqual([0, 1]);
    expect(clock.state.currentSentence).toBe(1);
  });

  it("replay rewinds the audio element", () => {
    const audio = { currentTime: 3.0 };
    const clock = new PlaybackClock(TWO_SENTENCES, { tickMs: 50, audio });
    clock.play();
    clock.replay();
    expect(audio.currentTime).toBe(0);
  });
});

describe("staged reveal through the interface", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  function playInterface(bundle = fixtureBundle()) {
    const root = freshRoot();
    const recorder = makeTelemetry("passive");
    const handles = buildInterface(root, bundle, "passive", recorder.queue, { tickMs: 50 });
    (root.querySelector("button.play") as HTMLButtonElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    return { root, recorder, handles, bundle };
  }

  it("reveals each sentence within 100 ms of its manifest start", () => {
    const { handles, bundle } = playInterface();
    let now = 0;
    const advanceTo = (ms: number) => {
      vi.advanceTimersByTime(Math.max(ms - now, 0));
      now = Math.max(now, ms);
    };
    for (const entry of bundle.timing_manifest) {
      const startMs = entry.start_s * 1000;
      if (startMs > 100) {
        advanceTo(startMs - 100);
        expect(handles.sentences[entry.sentence_index].hidden).toBe(true);
      }
      advanceTo(startMs + 100);
      expect(handles.sentences[entry.sentence_index].hidden).toBe(false);
    }
  });

  it("a degenerate bundle plays exactly three stages", () => {
    const { handles, bundle } = playInterface(degenerateBundle());
    const lastEnd = bundle.timing_manifest[bundle.timing_manifest.length - 1].end_s;
    vi.advanceTimersByTime(lastEnd * 1000 + 500);
    expect(handles.sentences).toHaveLength(3);
    expect(handles.sentences.every((s) => !s.hidden)).toBe(true);
  });

  it("replay hides sentences, restarts the clock, and posts replay + play", async () => {
    const { root, recorder, handles, bundle } = playInterface();
    const lastEnd = bundle.timing_manifest[bundle.timing_manifest.length - 1].end_s;
    vi.advanceTimersByTime(lastEnd * 1000 + 500);
    expect(handles.sentences.every((s) => !s.hidden)).toBe(true);

    (root.querySelector("button.replay") as HTMLButtonElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    // Stage 0 re-reveals immediately; the rest are hidden again.
    expect(handles.sentences[0].hidden).toBe(false);
    expect(handles.sentences.slice(1).every((s) => s.hidden)).toBe(true);

    await recorder.settle();
    const kinds = recorder.events.map((e) => e.kind);
    expect(kinds).toEqual(["play", "replay", "play"]);
  });

  it("posts a play event when playback starts", async () => {
    const { recorder } = playInterface();
    await recorder.settle();
    expect(recorder.events.map((e) => e.kind)).toEqual(["play"]);
    expect(recorder.events[0].interface_mode).toBe("passive");
  });
});
