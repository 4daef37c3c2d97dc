// Mirrors the ForecastBundle and telemetry wire formats documented in
// docs/bundle-schema.md of the engine repo.

export type SpanKind = "plain" | "hedge" | "number";

export interface TextSpan {
  kind: SpanKind;
  text: string;
  value?: number; // number spans only: the raw statistic
}

export interface SentenceData {
  index: number;
  spans: TextSpan[];
}

export interface TimingEntry {
  sentence_index: number;
  start_s: number;
  end_s: number;
}

export interface DensitySpec {
  grid: number[];
  density: number[];
  bandwidth: number;
}

export interface Interval {
  lo: number;
  hi: number;
}

export interface DotSpec {
  quantile_index: number;
  bin_index: number;
  stack_position: number;
}

export interface DotPlotSpec {
  domain: Interval;
  bins: Interval[];
  dots: DotSpec[];
}

export interface IconArray {
  filled: number;
  total: number;
  rows: number;
  cols: number;
  caption: string;
}

export interface CumulativePayload {
  threshold_f: number;
  probability: number;
  caption: string;
}

export interface BinPayloads {
  bin_index: number;
  count: number;
  occurrence: IconArray;
  cumulative: CumulativePayload;
}

export interface NumberPayload {
  value: number;
  text: string;
  bin_index: number;
  icon_array: IconArray;
}

export interface HedgeEffect {
  wobble_deg: number;
  blur_px: number;
}

export interface ForecastBundle {
  trial_id: number;
  threshold_f: number;
  annotated_text: { sentences: SentenceData[] };
  ssml: string;
  timing_manifest: TimingEntry[];
  density_spec: DensitySpec | null;
  dotplot_spec: DotPlotSpec;
  interaction_tables: {
    per_bin: BinPayloads[];
    per_number: NumberPayload[];
  };
  style: { hedge_color: string; hedge_effect: HedgeEffect };
}

export type InterfaceMode = "passive" | "active";

export type TelemetryKind =
  | "play"
  | "replay"
  | "vis_toggle"
  | "hover_start"
  | "hover_end"
  | "decision"
  | "confidence";

export type TelemetryTarget = "hedge" | "number" | "density" | "dotplot" | "none";

export interface TelemetryEvent {
  session_id: string;
  interface_mode: InterfaceMode;
  kind: TelemetryKind;
  target: TelemetryTarget;
  value: string;
  at_ms: number;
}
