import { describe, expect, it } from "vitest";

import { contrastRatio, parseCssColor, relativeLuminance } from "../src/color.js";
import { fixtureBundle } from "./helpers.js";

describe("color parsing", () => {
  it("parses hex colors", () => {
    expect(parseCssColor("#757575")).toEqual([117, 117, 117]);
    expect(parseCssColor("#fff")).toEqual([255, 255, 255]);
  });

  it("parses rgb() colors as the DOM reports them", () => {
    expect(parseCssColor("rgb(117, 117, 117)")).toEqual([117, 117, 117]);
  });

  it("rejects unknown syntax", () => {
    expect(() => parseCssColor("papayawhip")).toThrow();
  });
});

describe("WCAG contrast", () => {
  it("matches the luminance-formula oracle for the hedge gray", () => {
    // Hand-computed: ((117/255 + 0.055) / 1.055)^2.4 weighted -> L = 0.17789;
    // ratio vs white = 1.05 / (L + 0.05).
    expect(relativeLuminance("#757575")).toBeCloseTo(0.17788841598362912, 12);
    expect(contrastRatio("#757575", "#ffffff")).toBeCloseTo(4.607518093747377, 12);
  });

  it("meets WCAG AA for hedge text on white", () => {
    const ratio = contrastRatio("#757575", "#ffffff");
    expect(ratio).toBeGreaterThanOrEqual(4.5);
    expect(Math.round(ratio * 10) / 10).toBe(4.6);
  });

  it("is symmetric in its arguments", () => {
    expect(contrastRatio("#ffffff", "#757575")).toBe(contrastRatio("#757575", "#ffffff"));
  });
});

describe("bundle style", () => {
  it("carries the expected hedge gray and hover effect", () => {
    const bundle = fixtureBundle();
    expect(bundle.style.hedge_color).toBe("#757575");
    expect(bundle.style.hedge_effect).toEqual({ wobble_deg: 3.0, blur_px: 0.5 });
  });
});
