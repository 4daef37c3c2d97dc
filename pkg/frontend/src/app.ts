import { renderDensity, renderDotPlot, setChartStage } from "./charts.js";
import { DecisionForm } from "./decision.js";
import { wireHoverInteractions } from "./hover.js";
import { PlaybackClock } from "./playback.js";
import { TelemetryQueue } from "./telemetry.js";
import { hideAllSentences, renderText, revealSentence } from "./textview.js";
import { VisualizationToggle } from "./toggle.js";
import { Tooltip } from "./tooltip.js";
import type { ForecastBundle, InterfaceMode } from "./types.js";

export interface InterfaceHandles {
  clock: PlaybackClock;
  decision: DecisionForm;
  toggle: VisualizationToggle | null; // active mode only
  tooltip: Tooltip;
  sentences: HTMLElement[];
  charts: { dotplot: SVGSVGElement; density: SVGSVGElement | null };
}

export interface BuildOptions {
  tickMs?: number;
  audio?: { currentTime: number } | null;
}

/**
 * Assemble the forecast interface into `root`. Passive mode exposes only
 * play/replay and the decision form; active mode adds the three hover
 * interactions and the chart switcher.
 */
export function buildInterface(
  root: HTMLElement,
  bundle: ForecastBundle,
  mode: InterfaceMode,
  telemetry: TelemetryQueue,
  options: BuildOptions = {},
): InterfaceHandles {
  root.replaceChildren();
  root.classList.add(`mode-${mode}`);

  const player = document.createElement("div");
  player.className = "player";
  const playButton = document.createElement("button");
  playButton.className = "play";
  playButton.textContent = "Play forecast";
  const replayButton = document.createElement("button");
  replayButton.className = "replay";
  replayButton.textContent = "Replay";
  player.append(playButton, replayButton);

  const textContainer = document.createElement("div");
  textContainer.className = "forecast-text";

  const chartContainer = document.createElement("div");
  chartContainer.className = "charts";
  const dotplot = renderDotPlot(bundle.dotplot_spec);
  const density = bundle.density_spec
    ? renderDensity(bundle.density_spec, bundle.dotplot_spec)
    : null;
  if (density) {
    chartContainer.appendChild(density);
  }
  chartContainer.appendChild(dotplot);

  const decisionPanel = buildDecisionPanel();
  root.append(player, chartContainer, textContainer, decisionPanel.element);

  const sentences = renderText(textContainer, bundle);
  const totalStages = sentences.length;
  const stageCharts = (stage: number) => {
    setChartStage(dotplot, stage, totalStages);
    if (density) {
      setChartStage(density, stage, totalStages);
    }
  };

  const clock = new PlaybackClock(bundle.timing_manifest, {
    tickMs: options.tickMs,
    audio: options.audio,
    onStage: (index) => {
      revealSentence(sentences, index);
      stageCharts(index);
    },
  });

  const decision = new DecisionForm(telemetry, decisionPanel.hint, [
    ...decisionPanel.inputs,
    decisionPanel.submit,
  ]);
  decisionPanel.submit.addEventListener("click", (event) => {
    event.preventDefault();
    decision.submit(decisionPanel.choice(), decisionPanel.confidence());
  });

  playButton.addEventListener("click", () => {
    if (!clock.state.playing) {
      clock.play();
      telemetry.send("play");
      decision.notifyPlaybackStarted();
    }
  });
  replayButton.addEventListener("click", () => {
    hideAllSentences(sentences);
    clock.replay();
    telemetry.send("replay");
    telemetry.send("play");
    decision.notifyPlaybackStarted();
  });

  const tooltip = new Tooltip(root);
  let toggle: VisualizationToggle | null = null;
  if (mode === "active") {
    const toggleButton = document.createElement("button");
    toggleButton.className = "toggle-vis";
    player.appendChild(toggleButton);
    toggle = new VisualizationToggle(density, dotplot, toggleButton, telemetry);
    wireHoverInteractions(root, bundle, telemetry, tooltip, { dotplot, density });
  } else {
    // Passive: both charts visible, no hover affordances at all.
    dotplot.classList.remove("chart-hidden");
  }

  return { clock, decision, toggle, tooltip, sentences, charts: { dotplot, density } };
}

function buildDecisionPanel() {
  const element = document.createElement("form");
  element.className = "decision";

  const prompt = document.createElement("p");
  prompt.textContent = "Salt the roads tonight? (Ice forms at or below 32°F.)";
  element.appendChild(prompt);

  const saltInput = radio("salt", "Salt the roads");
  const noSaltInput = radio("no_salt", "Do not salt");
  element.append(saltInput.label, noSaltInput.label);

  const confidenceLabel = document.createElement("label");
  confidenceLabel.textContent = "Confidence: ";
  const confidenceInput = document.createElement("input");
  confidenceInput.type = "range";
  confidenceInput.min = "0";
  confidenceInput.max = "100";
  confidenceInput.value = "50";
  confidenceInput.className = "confidence";
  confidenceLabel.appendChild(confidenceInput);
  element.appendChild(confidenceLabel);

  const submit = document.createElement("button");
  submit.type = "submit";
  submit.className = "submit-decision";
  submit.textContent = "Submit decision";
  element.appendChild(submit);

  const hint = document.createElement("p");
  hint.className = "decision-hint";
  element.appendChild(hint);

  return {
    element,
    hint,
    submit,
    inputs: [saltInput.input, noSaltInput.input, confidenceInput],
    choice: (): "salt" | "no_salt" => (noSaltInput.input.checked ? "no_salt" : "salt"),
    confidence: () => Number(confidenceInput.value),
  };
}

function radio(value: string, text: string) {
  const label = document.createElement("label");
  const input = document.createElement("input");
  input.type = "radio";
  input.name = "choice";
  input.value = value;
  if (value === "salt") {
    input.checked = true;
  }
  label.append(input, ` ${text} `);
  return { label, input };
}

export async function fetchBundle(seed: number | null = null): Promise<ForecastBundle> {
  const seedQuery = seed === null ? "" : `?seed=${seed}`;
  const pick = await fetch(`/api/trial/random${seedQuery}`);
  if (!pick.ok) {
    throw new Error(`trial selection failed with ${pick.status}`);
  }
  const { trial_id } = (await pick.json()) as { trial_id: number };
  const response = await fetch(`/api/trial/${trial_id}/bundle`);
  if (!response.ok) {
    throw new Error(`bundle fetch failed with ${response.status}`);
  }
  return (await response.json()) as ForecastBundle;
}
