import type { CumulativePayload, IconArray } from "./types.js";

/** 10x10 icon array: the first `filled` cells are marked. */
export function iconArrayElement(payload: IconArray): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "icon-array";
  const grid = document.createElement("div");
  grid.className = "icon-grid";
  grid.style.gridTemplateColumns = `repeat(${payload.cols}, 1fr)`;
  for (let i = 0; i < payload.total; i++) {
    const cell = document.createElement("span");
    cell.className = i < payload.filled ? "icon-cell filled" : "icon-cell";
    grid.appendChild(cell);
  }
  const caption = document.createElement("p");
  caption.className = "tooltip-caption";
  caption.textContent = payload.caption;
  wrap.append(grid, caption);
  return wrap;
}

export function cumulativeElement(payload: CumulativePayload): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "cumulative";
  const caption = document.createElement("p");
  caption.className = "tooltip-caption";
  caption.textContent = payload.caption;
  wrap.appendChild(caption);
  return wrap;
}

/** One floating tooltip shared by every hover interaction. */
export class Tooltip {
  readonly element: HTMLElement;

  constructor(parent: HTMLElement) {
    this.element = document.createElement("div");
    this.element.className = "tooltip";
    this.element.hidden = true;
    parent.appendChild(this.element);
  }

  show(content: HTMLElement, x: number, y: number): void {
    this.element.replaceChildren(content);
    this.element.style.left = `${x + 12}px`;
    this.element.style.top = `${y + 12}px`;
    this.element.hidden = false;
  }

  hide(): void {
    this.element.hidden = true;
    this.element.replaceChildren();
  }

  get visible(): boolean {
    return !this.element.hidden;
  }
}
