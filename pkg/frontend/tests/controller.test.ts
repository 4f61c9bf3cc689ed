// Drill-down and fetch-discipline tests against a real fixture HTTP server.

import { createServer, type Server } from "node:http";
import { afterAll, beforeAll, beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DashboardController, type PanelId, type Renderer } from "../src/controller.js";
import type { ViewState } from "../src/state.js";
import type {
  CloudWord,
  LineChartView,
  LocationTableView,
  SentimentBar,
  TweetListView,
} from "../src/viewmodel.js";

const CATS = ["Food", "Healthcare", "Sport", "Technology", "Transport"];

// the four-tweet fixture: Food counts 2 positive / 1 neutral / 1 negative
const FOOD_SENTIMENT = {
  category: "Food",
  bucket_seconds: 86400,
  buckets: [
    {
      category: "Food",
      bucket_start: "2017-06-01T00:00:00Z",
      counts: { positive: 2, neutral: 1, negative: 1 },
      percentages: { positive: 50.0, neutral: 25.0, negative: 25.0 },
    },
  ],
  totals: {
    counts: { positive: 2, neutral: 1, negative: 1 },
    percentages: { positive: 50.0, neutral: 25.0, negative: 25.0 },
  },
};

const FOOD_TOPICS = {
  category: "Food",
  topics: [
    { phrase: "vegan pie", count: 3 },
    { phrase: "quinoa bowl", count: 1 },
  ],
};

const VEGAN_PIE_TWEETS = {
  topic: "vegan pie",
  tweets: [
    { id: "t1", text: "Love this great vegan pie :)", created_at: "2017-06-01T08:00:00Z", author: "alice", sentiment: "Positive" },
    { id: "t2", text: "Happy with the fresh vegan pie", created_at: "2017-06-01T10:30:00Z", author: "bob", sentiment: "Positive" },
    { id: "t4", text: "This vegan pie tastes awful", created_at: "2017-06-01T15:45:00Z", author: "dave", sentiment: "Negative" },
  ],
};

const TRENDS = {
  bucket_seconds: 86400,
  series: [
    {
      pair: ["vegan pie", "quinoa bowl"],
      points: [
        { bucket_start: "2017-06-01T00:00:00Z", weight: 0 },
        { bucket_start: "2017-06-02T00:00:00Z", weight: 2.5 },
        { bucket_start: "2017-06-03T00:00:00Z", weight: 0 },
      ],
    },
  ],
};

const HASHTAGS = {
  bucket_seconds: 86400,
  series: [
    {
      tag: "vegan",
      points: [
        { bucket_start: "2017-06-01T00:00:00Z", count: 4 },
        { bucket_start: "2017-06-02T00:00:00Z", count: 1 },
      ],
    },
  ],
};

const LOCATIONS = {
  locations: [
    { place: "Singapore", count: 7, lat: 1.35, lon: 103.82 },
    { place: "London", count: 2, lat: 51.5, lon: -0.13 },
  ],
};

class FixtureServer {
  readonly hits = new Map<string, number>();
  private server: Server | null = null;
  port = 0;
  delayMs = 0;
  failingPaths = new Set<string>();

  start(): Promise<void> {
    this.server = createServer((req, res) => {
      const url = new URL(req.url ?? "/", "http://localhost");
      const path = url.pathname;
      this.hits.set(path, (this.hits.get(path) ?? 0) + 1);
      const respond = () => {
        if (this.failingPaths.has(path)) {
          res.writeHead(500, { "Content-Type": "application/json" });
          res.end(JSON.stringify({ error: { status: 500, message: "boom" } }));
          return;
        }
        const payload = this.payloadFor(path);
        if (payload === undefined) {
          res.writeHead(404, { "Content-Type": "application/json" });
          res.end(JSON.stringify({ error: { status: 404, message: "unknown topic" } }));
          return;
        }
        res.writeHead(200, { "Content-Type": "application/json" });
        res.end(JSON.stringify(payload));
      };
      if (this.delayMs > 0) setTimeout(respond, this.delayMs);
      else respond();
    });
    return new Promise((resolve) => {
      this.server!.listen(0, "127.0.0.1", () => {
        const addr = this.server!.address();
        if (addr && typeof addr === "object") this.port = addr.port;
        resolve();
      });
    });
  }

  private payloadFor(path: string): unknown {
    if (path === "/api/categories") return CATS;
    const sentiment = path.match(/^\/api\/categories\/([^/]+)\/sentiment$/);
    if (sentiment) {
      const category = decodeURIComponent(sentiment[1]!);
      if (category === "Food") return FOOD_SENTIMENT;
      return {
        category,
        bucket_seconds: 86400,
        buckets: [],
        totals: {
          counts: { positive: 0, neutral: 0, negative: 0 },
          percentages: { positive: 0, neutral: 0, negative: 0 },
        },
      };
    }
    if (path === "/api/categories/Food/topics") return FOOD_TOPICS;
    if (path === "/api/topics/vegan%20pie/tweets" || path === "/api/topics/vegan pie/tweets") {
      return VEGAN_PIE_TWEETS;
    }
    if (path.startsWith("/api/topics/")) return undefined; // 404 for anything else
    if (path === "/api/correlations/trends") return TRENDS;
    if (path === "/api/hashtags/trends") return HASHTAGS;
    if (path === "/api/locations/summary") return LOCATIONS;
    return undefined;
  }

  stop(): Promise<void> {
    return new Promise((resolve) => this.server?.close(() => resolve()));
  }

  resetHits() {
    this.hits.clear();
  }

  total(predicate: (path: string) => boolean): number {
    let n = 0;
    for (const [path, count] of this.hits) if (predicate(path)) n += count;
    return n;
  }
}

class RecordingRenderer implements Renderer {
  states: ViewState[] = [];
  bars: SentimentBar[][] = [];
  topics: Array<{ category: string; words: CloudWord[] }> = [];
  tweets: TweetListView[] = [];
  trends: LineChartView[] = [];
  hashtags: LineChartView[] = [];
  locations: LocationTableView[] = [];
  errors: Array<{ panel: PanelId; message: string }> = [];

  renderState(s: ViewState) {
    this.states.push(s);
  }
  renderBars(view: SentimentBar[]) {
    this.bars.push(view);
  }
  renderTopics(category: string, words: CloudWord[]) {
    this.topics.push({ category, words });
  }
  renderTweets(view: TweetListView) {
    this.tweets.push(view);
  }
  renderTrends(view: LineChartView) {
    this.trends.push(view);
  }
  renderHashtags(view: LineChartView) {
    this.hashtags.push(view);
  }
  renderLocations(view: LocationTableView) {
    this.locations.push(view);
  }
  renderError(panel: PanelId, message: string) {
    this.errors.push({ panel, message });
  }
}

const server = new FixtureServer();

beforeAll(() => server.start());
afterAll(() => server.stop());
beforeEach(() => {
  server.resetHits();
  server.delayMs = 0;
  server.failingPaths = new Set();
});

function makeController() {
  const renderer = new RecordingRenderer();
  const api = new ApiClient(`http://127.0.0.1:${server.port}`);
  const controller = new DashboardController(api, renderer);
  return { controller, renderer };
}

describe("drill-down path", () => {
  it("renders bars, topic panel and tweet popup with the fixture's exact counts", async () => {
    const { controller, renderer } = makeController();
    await controller.init();

    // category bars: five bars, Food carrying the fixture counts
    const bars = renderer.bars.at(-1)!;
    expect(bars.map((b) => b.category)).toEqual(CATS);
    const food = bars.find((b) => b.category === "Food")!;
    expect(food.segments.map((s) => s.count)).toEqual([2, 1, 1]);
    expect(food.segments.map((s) => s.percent)).toEqual([50.0, 25.0, 25.0]);
    expect(food.total).toBe(4);

    // click the Food bar -> topic panel with exact topic counts
    await controller.clickCategory("Food");
    const panel = renderer.topics.at(-1)!;
    expect(panel.category).toBe("Food");
    expect(panel.words.map((w) => [w.phrase, w.count])).toEqual([
      ["vegan pie", 3],
      ["quinoa bowl", 1],
    ]);
    expect(controller.current.selectedCategory).toBe("Food");

    // click a topic -> tweet popup with exactly the fixture tweets
    await controller.clickTopic("vegan pie");
    const popup = renderer.tweets.at(-1)!;
    expect(popup.topic).toBe("vegan pie");
    expect(popup.items).toHaveLength(3);
    expect(popup.items.map((t) => t.sentiment)).toEqual(["Positive", "Positive", "Negative"]);
    expect(popup.items[0]!.text).toBe("Love this great vegan pie :)");
    expect(controller.current.selectedTopic).toBe("vegan pie");
  });

  it("clicking a different topic replaces the list and updates state", async () => {
    const { controller, renderer } = makeController();
    await controller.init();
    await controller.clickCategory("Food");
    await controller.clickTopic("vegan pie");
    await controller.clickTopic("quinoa bowl"); // fixture server 404s this one
    expect(controller.current.selectedTopic).toBe("quinoa bowl");
    const last = renderer.tweets.at(-1)!;
    expect(last.topic).toBe("quinoa bowl");
    expect(last.emptyMessage).toMatch(/No tweets/);
    expect(renderer.errors).toEqual([]); // 404 handled as empty state, not an error
  });

  it("selecting a topic outside the category list is a no-op", async () => {
    const { controller, renderer } = makeController();
    await controller.init();
    await controller.clickCategory("Food");
    const tweetRenders = renderer.tweets.length;
    await controller.clickTopic("not a topic");
    expect(controller.current.selectedTopic).toBeNull();
    expect(renderer.tweets.length).toBe(tweetRenders);
  });
});

describe("fetch discipline", () => {
  it("time-filter change triggers exactly one re-fetch per visible panel", async () => {
    const { controller } = makeController();
    await controller.init();
    await controller.clickCategory("Food");
    await controller.clickTopic("vegan pie");
    server.resetHits();

    await controller.changeTimeRange("2017-06-01T00:00:00Z", "2017-06-02T00:00:00Z");

    // sentiment panel: one request per category, each exactly once
    for (const cat of CATS) {
      expect(server.hits.get(`/api/categories/${encodeURIComponent(cat)}/sentiment`)).toBe(1);
    }
    expect(server.hits.get("/api/categories/Food/topics")).toBe(1);
    expect(server.total((p) => p.startsWith("/api/topics/"))).toBe(1);
    expect(server.hits.get("/api/correlations/trends")).toBe(1);
    expect(server.hits.get("/api/hashtags/trends")).toBe(1);
    expect(server.hits.get("/api/locations/summary")).toBe(1);
    // and nothing else was fetched
    expect(server.total(() => true)).toBe(CATS.length + 5);
  });

  it("hidden panels are not fetched", async () => {
    const { controller } = makeController();
    await controller.init();
    server.resetHits();
    await controller.changeTimeRange(null, null);
    expect(server.hits.get("/api/categories/Food/topics")).toBeUndefined();
    expect(server.total((p) => p.startsWith("/api/topics/"))).toBe(0);
  });

  it("a newer fetch supersedes an in-flight one (stale response dropped)", async () => {
    const { controller, renderer } = makeController();
    await controller.init();
    server.delayMs = 40;
    const slow = controller.changeTimeRange("2017-06-01T00:00:00Z", null);
    server.delayMs = 0;
    const fast = controller.changeTimeRange("2017-06-02T00:00:00Z", null);
    await Promise.all([slow, fast]);
    // the aborted round must not have produced renders after the fresh one
    expect(renderer.errors).toEqual([]);
    const lastState = renderer.states.at(-1)!;
    expect(lastState.timeRange.from).toBe("2017-06-02T00:00:00Z");
  });

  it("time filter narrows trend points client-side from fetched data", async () => {
    const { controller, renderer } = makeController();
    await controller.init();
    const full = renderer.trends.at(-1)!;
    expect(full.lines[0]!.points).toHaveLength(3);
    await controller.changeTimeRange("2017-06-02T00:00:00Z", "2017-06-03T00:00:00Z");
    const narrowed = renderer.trends.at(-1)!;
    expect(narrowed.lines[0]!.points).toHaveLength(1);
    expect(narrowed.lines[0]!.points[0]!.value).toBe(2.5);
  });

  it("one failing panel shows an inline error while the rest render", async () => {
    server.failingPaths = new Set(["/api/locations/summary"]);
    const { controller, renderer } = makeController();
    await controller.init();
    expect(renderer.errors).toEqual([{ panel: "locations", message: "boom" }]);
    expect(renderer.locations).toEqual([]);
    expect(renderer.bars.length).toBeGreaterThan(0); // other panels unaffected
    expect(renderer.trends.length).toBeGreaterThan(0);

    // retry after the backend recovers: the panel renders normally again
    server.failingPaths = new Set();
    await controller.changeTimeRange(null, null);
    expect(renderer.locations.length).toBe(1);
  });
});
