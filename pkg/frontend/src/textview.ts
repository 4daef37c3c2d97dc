import type { ForecastBundle } from "./types.js";

/**
 * Render the annotated sentences as hidden paragraphs; playback reveals
 * them stage by stage. Hedge spans take the bundle's gray, number spans
 * carry their raw value for hover lookups.
 */
export function renderText(container: HTMLElement, bundle: ForecastBundle): HTMLElement[] {
  const sentences: HTMLElement[] = [];
  for (const sentence of bundle.annotated_text.sentences) {
    const p = document.createElement("p");
    p.className = "sentence";
    p.dataset.sentenceIndex = String(sentence.index);
    p.hidden = true;
    for (const span of sentence.spans) {
      const el = document.createElement("span");
      el.className = `span-${span.kind}`;
      el.textContent = span.text;
      if (span.kind === "hedge") {
        el.style.color = bundle.style.hedge_color;
      }
      if (span.kind === "number" && span.value !== undefined) {
        el.dataset.value = String(span.value);
      }
      p.appendChild(el);
    }
    container.appendChild(p);
    sentences.push(p);
  }
  return sentences;
}

export function revealSentence(sentences: HTMLElement[], index: number): void {
  const sentence = sentences[index];
  if (sentence) {
    sentence.hidden = false;
    sentence.classList.add("revealed");
  }
}

export function hideAllSentences(sentences: HTMLElement[]): void {
  for (const sentence of sentences) {
    sentence.hidden = true;
    sentence.classList.remove("revealed");
  }
}
