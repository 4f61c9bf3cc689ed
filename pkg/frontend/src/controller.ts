// Orchestration: user actions -> pure state transition -> panel fetches ->
// view models pushed to a renderer. Each panel holds at most one in-flight
// request; issuing a new one aborts its predecessor.

import { ApiClient, ApiError } from "./api.js";
import * as state from "./state.js";
import type { ViewState } from "./state.js";
import * as vm from "./viewmodel.js";
import type { CategorySentiment } from "./types.js";

export type PanelId = "sentiment" | "topics" | "tweets" | "trends" | "hashtags" | "locations";

export interface Renderer {
  renderState(s: ViewState): void;
  renderBars(view: vm.SentimentBar[]): void;
  renderTopics(category: string, view: vm.CloudWord[]): void;
  renderTweets(view: vm.TweetListView): void;
  renderTrends(view: vm.LineChartView): void;
  renderHashtags(view: vm.LineChartView): void;
  renderLocations(view: vm.LocationTableView): void;
  renderError(panel: PanelId, message: string): void;
}

export interface ControllerOptions {
  topicLimit?: number;
  trendBucket?: string;
}

export class DashboardController {
  private viewState: ViewState;
  private readonly inflight = new Map<PanelId, AbortController>();
  private sentimentCache = new Map<string, CategorySentiment>();
  private readonly topicLimit: number;
  private readonly trendBucket: string;

  constructor(
    private readonly api: ApiClient,
    private readonly renderer: Renderer,
    options: ControllerOptions = {},
  ) {
    this.viewState = state.initialState();
    this.topicLimit = options.topicLimit ?? 30;
    this.trendBucket = options.trendBucket ?? "day";
  }

  get current(): ViewState {
    return this.viewState;
  }

  visiblePanels(): PanelId[] {
    const panels: PanelId[] = ["sentiment", "trends", "hashtags", "locations"];
    if (this.viewState.selectedCategory) panels.push("topics");
    if (this.viewState.selectedTopic) panels.push("tweets");
    return panels;
  }

  private setState(next: ViewState) {
    this.viewState = next;
    this.renderer.renderState(next);
  }

  private renderBarsFromCache() {
    this.renderer.renderBars(
      vm.sentimentBars(this.viewState.categories, this.sentimentCache, this.viewState.selectedCategory),
    );
  }

  /** Start (or restart) one panel's fetch; the previous one is aborted. */
  private run(panel: PanelId, task: (signal: AbortSignal) => Promise<void>): Promise<void> {
    this.inflight.get(panel)?.abort();
    const controller = new AbortController();
    this.inflight.set(panel, controller);
    return task(controller.signal)
      .catch((err: unknown) => {
        if (controller.signal.aborted) return; // superseded, drop silently
        const message = err instanceof Error ? err.message : String(err);
        this.renderer.renderError(panel, message);
      })
      .finally(() => {
        if (this.inflight.get(panel) === controller) {
          this.inflight.delete(panel);
        }
      });
  }

  private refreshPanel(panel: PanelId): Promise<void> {
    switch (panel) {
      case "sentiment":
        return this.run(panel, async (signal) => {
          const { from, to } = this.viewState.timeRange;
          const fresh = new Map<string, CategorySentiment>();
          for (const category of this.viewState.categories) {
            fresh.set(category, await this.api.categorySentiment(category, { from, to }, signal));
          }
          this.sentimentCache = fresh;
          this.renderBarsFromCache();
        });
      case "topics":
        return this.run(panel, async (signal) => {
          const category = this.viewState.selectedCategory;
          if (!category) return;
          const data = await this.api.categoryTopics(category, this.topicLimit, signal);
          const phrases = data.topics.map((t) => t.phrase);
          this.setState(state.setCategoryTopics(this.viewState, phrases));
          this.renderer.renderTopics(category, vm.wordCloud(data.topics));
        });
      case "tweets":
        return this.run(panel, async (signal) => {
          const topic = this.viewState.selectedTopic;
          if (!topic) return;
          try {
            const data = await this.api.topicTweets(topic, this.viewState.selectedCategory, signal);
            this.renderer.renderTweets(vm.tweetList(topic, data.tweets));
          } catch (err) {
            if (err instanceof ApiError && err.status === 404) {
              this.renderer.renderTweets(vm.tweetList(topic, null)); // vanished topic -> empty state
              return;
            }
            throw err;
          }
        });
      case "trends":
        return this.run(panel, async (signal) => {
          const data = await this.api.correlationTrends(null, this.trendBucket, signal);
          const { from, to } = this.viewState.timeRange;
          this.renderer.renderTrends(vm.correlationTrendChart(data.series, from, to));
        });
      case "hashtags":
        return this.run(panel, async (signal) => {
          const data = await this.api.hashtagTrends(null, this.trendBucket, signal);
          const { from, to } = this.viewState.timeRange;
          this.renderer.renderHashtags(vm.hashtagTrendChart(data.series, from, to));
        });
      case "locations":
        return this.run(panel, async (signal) => {
          const data = await this.api.locationsSummary(signal);
          this.renderer.renderLocations(vm.locationTable(data.locations));
        });
    }
  }

  private refreshAllVisible(): Promise<void> {
    return Promise.all(this.visiblePanels().map((panel) => this.refreshPanel(panel))).then(
      () => undefined,
    );
  }

  /** Load categories and populate every always-on panel. */
  async init(): Promise<void> {
    const categories = await this.api.categories();
    this.setState(state.setCategories(this.viewState, categories));
    await this.refreshAllVisible();
  }

  /** Stacked-bar click: select the category and fetch its topic panel. */
  async clickCategory(category: string): Promise<void> {
    const before = this.viewState;
    this.setState(state.selectCategory(before, category));
    if (this.viewState === before) return;
    this.renderBarsFromCache(); // selection highlight; data unchanged
    await this.refreshPanel("topics");
  }

  /** Word-cloud / topic-panel click: drill down into the tweet popup. */
  async clickTopic(topic: string): Promise<void> {
    this.setState(state.selectTopic(this.viewState, topic));
    if (this.viewState.selectedTopic !== topic) return;
    await this.refreshPanel("tweets");
  }

  async clearSelection(): Promise<void> {
    this.setState(state.clearCategory(this.viewState));
    this.renderBarsFromCache();
  }

  /** Time filter drives every visible panel: exactly one re-fetch each. */
  async changeTimeRange(from: string | null, to: string | null): Promise<void> {
    this.setState(state.setTimeRange(this.viewState, from, to));
    await this.refreshAllVisible();
  }

  async changeLocationFilter(location: string | null): Promise<void> {
    this.setState(state.setLocationFilter(this.viewState, location));
    await this.refreshAllVisible();
  }
}
