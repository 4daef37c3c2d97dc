import { describe, expect, it } from "vitest";

import { buildInterface } from "../src/app.js";
import { contrastRatio } from "../src/color.js";
import { degenerateBundle, fixtureBundle, freshRoot, makeTelemetry, mouse } from "./helpers.js";

function activeInterface(bundle = fixtureBundle()) {
  const root = freshRoot();
  const recorder = makeTelemetry("active");
  const handles = buildInterface(root, bundle, "active", recorder.queue, { tickMs: 50 });
  return { root, recorder, handles, bundle };
}

describe("mode affordances", () => {
  it("passive mode exposes zero hover affordances", () => {
    const root = freshRoot();
    const recorder = makeTelemetry("passive");
    buildInterface(root, fixtureBundle(), "passive", recorder.queue);
    expect(root.querySelectorAll("[data-hover]")).toHaveLength(0);
    expect(root.querySelector("button.toggle-vis")).toBeNull();
  });

  it("active mode exposes exactly the three hover kinds", () => {
    const { root } = activeInterface();
    const kinds = new Set(
      [...root.querySelectorAll<HTMLElement>("[data-hover]")].map((el) => el.dataset.hover),
    );
    expect(kinds).toEqual(new Set(["hedge", "number", "chart"]));
  });

  it("hovering passive text changes nothing", () => {
    const root = freshRoot();
    const recorder = makeTelemetry("passive");
    buildInterface(root, fixtureBundle(), "passive", recorder.queue);
    const hedge = root.querySelector<HTMLElement>(".span-hedge")!;
    hedge.dispatchEvent(mouse("mouseenter"));
    expect(hedge.style.filter).toBe("");
    expect(recorder.events).toHaveLength(0);
  });
});

describe("hedge rendering and hover", () => {
  it("renders hedges in the bundle gray with AA contrast on white", () => {
    const { root } = activeInterface();
    const hedge = root.querySelector<HTMLElement>(".span-hedge")!;
    // jsdom normalizes the assigned hex to rgb(117, 117, 117)
    expect(contrastRatio(hedge.style.color, "#ffffff")).toBeGreaterThanOrEqual(4.5);
  });

  it("wobbles and blurs on hover, and posts hover telemetry", async () => {
    const { root, recorder } = activeInterface();
    const hedge = root.querySelector<HTMLElement>(".span-hedge")!;
    hedge.dispatchEvent(mouse("mouseenter"));
    expect(hedge.style.filter).toBe("blur(0.5px)");
    expect(hedge.style.transform).toBe("rotate(3deg)");
    expect(hedge.classList.contains("wobbling")).toBe(true);

    hedge.dispatchEvent(mouse("mouseleave"));
    expect(hedge.style.filter).toBe("");
    expect(hedge.classList.contains("wobbling")).toBe(false);

    await recorder.settle();
    expect(recorder.events.map((e) => [e.kind, e.target])).toEqual([
      ["hover_start", "hedge"],
      ["hover_end", "hedge"],
    ]);
  });
});

describe("number hover", () => {
  it("shows a fully filled icon array for the all-32 trial", async () => {
    const { root, recorder, handles } = activeInterface(degenerateBundle());
    const number = root.querySelector<HTMLElement>(".span-number")!;
    number.dispatchEvent(mouse("mouseenter"));

    expect(handles.tooltip.visible).toBe(true);
    const cells = handles.tooltip.element.querySelectorAll(".icon-cell");
    const filled = handles.tooltip.element.querySelectorAll(".icon-cell.filled");
    expect(cells).toHaveLength(100);
    expect(filled).toHaveLength(100);

    await recorder.settle();
    expect(recorder.events[0]).toMatchObject({ kind: "hover_start", target: "number" });
  });

  it("highlights the matching chart bin and clears on leave", () => {
    const { root, handles } = activeInterface(degenerateBundle());
    const number = root.querySelector<HTMLElement>(".span-number")!;
    number.dispatchEvent(mouse("mouseenter"));
    expect(handles.charts.dotplot.querySelectorAll(".dot.highlighted")).toHaveLength(100);

    number.dispatchEvent(mouse("mouseleave"));
    expect(handles.charts.dotplot.querySelectorAll(".dot.highlighted")).toHaveLength(0);
    expect(handles.tooltip.visible).toBe(false);
  });

  it("icon array caption mentions the likelihood count", () => {
    const { root, handles, bundle } = activeInterface();
    const number = root.querySelector<HTMLElement>(".span-number")!;
    number.dispatchEvent(mouse("mouseenter"));
    const caption = handles.tooltip.element.querySelector(".tooltip-caption")!;
    const payload = bundle.interaction_tables.per_number[0];
    expect(caption.textContent).toBe(payload.icon_array.caption);
    expect(caption.textContent).toContain(`${payload.icon_array.filled} in 100`);
  });
});

describe("chart mark hover", () => {
  it("hovering the last dot shows a 100% cumulative tooltip", async () => {
    const { recorder, handles } = activeInterface();
    const dots = [...handles.charts.dotplot.querySelectorAll<SVGElement>(".dot")];
    const last = dots.reduce((a, b) =>
      Number(a.dataset.quantileIndex) > Number(b.dataset.quantileIndex) ? a : b,
    );
    last.dispatchEvent(mouse("mouseover"));
    expect(handles.tooltip.visible).toBe(true);
    expect(handles.tooltip.element.textContent).toContain("100%");

    await recorder.settle();
    expect(recorder.events[0]).toMatchObject({ kind: "hover_start", target: "dotplot" });
  });

  it("density strips raise the same per-bin cumulative payloads", () => {
    const { handles, bundle } = activeInterface();
    const density = handles.charts.density!;
    const strips = density.querySelectorAll<SVGElement>(".density-strip");
    expect(strips).toHaveLength(20);
    const strip = strips[10];
    strip.dispatchEvent(mouse("mouseover"));
    const expected = bundle.interaction_tables.per_bin[10].cumulative.caption;
    expect(handles.tooltip.element.textContent).toContain(expected);
  });

  it("mouseout hides the tooltip and posts hover_end", async () => {
    const { recorder, handles } = activeInterface();
    const dot = handles.charts.dotplot.querySelector<SVGElement>(".dot")!;
    dot.dispatchEvent(mouse("mouseover"));
    dot.dispatchEvent(mouse("mouseout"));
    expect(handles.tooltip.visible).toBe(false);
    await recorder.settle();
    expect(recorder.events.map((e) => e.kind)).toEqual(["hover_start", "hover_end"]);
  });
});
