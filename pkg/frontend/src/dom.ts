// Browser renderer: applies view models to the DOM. Kept free of any
// analytics; everything it shows arrives precomputed in the view models.

import type { PanelId, Renderer } from "./controller.js";
import type { ViewState } from "./state.js";
import { locationTable } from "./viewmodel.js";
import type {
  CloudWord,
  LineChartView,
  LocationSortKey,
  LocationTableView,
  SentimentBar,
  TweetListView,
} from "./viewmodel.js";

// the stated visualization convention: positive blue, neutral green, negative red
const SEGMENT_COLORS: Record<string, string> = {
  positive: "#3b6fd4",
  neutral: "#4caf7d",
  negative: "#d44a3b",
};

const LINE_COLORS = ["#3b6fd4", "#d44a3b", "#4caf7d", "#b08b2e", "#7d4cafff", "#2e9ab0"];

export interface DomHooks {
  onCategoryClick(category: string): void;
  onTopicClick(topic: string): void;
  onClearSelection(): void;
}

function clear(el: Element) {
  while (el.firstChild) el.removeChild(el.firstChild);
}

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing dashboard element #${id}`);
  return el;
}

export class DomRenderer implements Renderer {
  private hooks: DomHooks | null = null;

  bind(hooks: DomHooks) {
    this.hooks = hooks;
  }

  renderState(s: ViewState): void {
    byId("selection").textContent = s.selectedCategory
      ? s.selectedTopic
        ? `${s.selectedCategory} › ${s.selectedTopic}`
        : s.selectedCategory
      : "All categories";
    const popup = byId("tweet-popup");
    if (!s.selectedTopic) popup.classList.add("hidden");
    const topics = byId("topics-panel");
    topics.classList.toggle("hidden", !s.selectedCategory);
  }

  renderBars(bars: SentimentBar[]): void {
    const host = byId("bars");
    clear(host);
    for (const bar of bars) {
      const row = document.createElement("div");
      row.className = "bar-row" + (bar.selected ? " selected" : "");
      const label = document.createElement("span");
      label.className = "bar-label";
      label.textContent = bar.category;
      row.appendChild(label);
      const track = document.createElement("div");
      track.className = "bar-track";
      if (bar.empty) {
        const none = document.createElement("span");
        none.className = "bar-empty";
        none.textContent = "no data";
        track.appendChild(none);
      } else {
        for (const seg of bar.segments) {
          if (seg.fraction === 0) continue;
          const piece = document.createElement("div");
          piece.className = "bar-seg";
          piece.style.background = SEGMENT_COLORS[seg.label] ?? "#999";
          piece.style.flexGrow = String(seg.fraction);
          piece.title = `${bar.category} ${seg.label}: ${seg.count} (${seg.percent.toFixed(1)}%)`;
          track.appendChild(piece);
        }
      }
      track.addEventListener("click", () => this.hooks?.onCategoryClick(bar.category));
      row.appendChild(track);
      host.appendChild(row);
    }
  }

  renderTopics(category: string, words: CloudWord[]): void {
    byId("topics-title").textContent = `Topics in ${category}`;
    const cloud = byId("topic-cloud");
    clear(cloud);
    for (const word of words) {
      const span = document.createElement("button");
      span.className = "cloud-word";
      span.textContent = word.phrase;
      span.style.fontSize = `${word.fontPx}px`;
      span.title = `${word.phrase}: ${word.count} tweets`;
      span.addEventListener("click", () => this.hooks?.onTopicClick(word.phrase));
      cloud.appendChild(span);
    }
  }

  renderTweets(view: TweetListView): void {
    const popup = byId("tweet-popup");
    popup.classList.remove("hidden");
    byId("tweet-popup-title").textContent = `Tweets for “${view.topic}”`;
    const list = byId("tweet-list");
    clear(list);
    if (view.emptyMessage) {
      const empty = document.createElement("li");
      empty.className = "tweet-empty";
      empty.textContent = view.emptyMessage;
      list.appendChild(empty);
      return;
    }
    for (const item of view.items) {
      const li = document.createElement("li");
      li.className = `tweet tweet-${item.sentiment.toLowerCase()}`;
      const text = document.createElement("p");
      text.textContent = item.text;
      const meta = document.createElement("small");
      meta.textContent = `${item.createdAt} · ${item.sentiment}`;
      li.appendChild(text);
      li.appendChild(meta);
      list.appendChild(li);
    }
  }

  renderTrends(view: LineChartView): void {
    this.renderChart("trend-chart", view);
  }

  renderHashtags(view: LineChartView): void {
    this.renderChart("hashtag-chart", view);
  }

  private renderChart(hostId: string, view: LineChartView): void {
    const host = byId(hostId);
    clear(host);
    const width = 560;
    const height = 180;
    const pad = 24;
    const svgNs = "http://www.w3.org/2000/svg";
    const svg = document.createElementNS(svgNs, "svg");
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    const axis = document.createElementNS(svgNs, "path");
    axis.setAttribute(
      "d",
      `M ${pad} ${pad} L ${pad} ${height - pad} L ${width - pad} ${height - pad}`,
    );
    axis.setAttribute("class", "chart-axis");
    svg.appendChild(axis);
    view.lines.forEach((line, i) => {
      if (!line.points.length) return;
      const coords = line.points
        .map((p) => {
          const x = pad + p.x * (width - 2 * pad);
          const y = height - pad - p.y * (height - 2 * pad);
          return `${x.toFixed(1)},${y.toFixed(1)}`;
        })
        .join(" ");
      const poly = document.createElementNS(svgNs, "polyline");
      poly.setAttribute("points", coords);
      poly.setAttribute("fill", "none");
      poly.setAttribute("stroke", LINE_COLORS[i % LINE_COLORS.length] ?? "#333");
      poly.setAttribute("stroke-width", "2");
      const title = document.createElementNS(svgNs, "title");
      title.textContent = line.label;
      poly.appendChild(title);
      svg.appendChild(poly);
    });
    host.appendChild(svg);
    const legend = document.createElement("div");
    legend.className = "legend";
    view.lines.forEach((line, i) => {
      const item = document.createElement("span");
      item.textContent = line.label;
      item.style.color = LINE_COLORS[i % LINE_COLORS.length] ?? "#333";
      legend.appendChild(item);
    });
    host.appendChild(legend);
  }

  renderLocations(view: LocationTableView): void {
    // header clicks re-sort the already-fetched rows locally
    const placeHeader = document.getElementById("location-sort-place");
    const countHeader = document.getElementById("location-sort-count");
    const resort = (key: LocationSortKey) => this.renderLocations(locationTable(view.rows, key));
    placeHeader?.replaceWith(placeHeader.cloneNode(true));
    countHeader?.replaceWith(countHeader.cloneNode(true));
    document.getElementById("location-sort-place")?.addEventListener("click", () => resort("place"));
    document.getElementById("location-sort-count")?.addEventListener("click", () => resort("count"));
    const body = byId("location-rows");
    clear(body);
    for (const row of view.rows) {
      const tr = document.createElement("tr");
      for (const value of [
        row.place,
        String(row.count),
        row.lat !== null && row.lon !== null ? `${row.lat.toFixed(3)}, ${row.lon.toFixed(3)}` : "—",
      ]) {
        const td = document.createElement("td");
        td.textContent = value;
        tr.appendChild(td);
      }
      body.appendChild(tr);
    }
  }

  renderError(panel: PanelId, message: string): void {
    const host = document.getElementById(`${panel}-error`) ?? byId("global-error");
    host.textContent = `${panel}: ${message} (retry by adjusting filters)`;
    host.classList.remove("hidden");
  }
}
