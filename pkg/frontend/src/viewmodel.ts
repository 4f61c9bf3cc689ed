// Pure view-model builders: API payloads in, layout-ready values out.
// The only arithmetic here is proportional layout and display rounding;
// every underlying number comes from the API.

import type {
  CategorySentiment,
  HashtagSeries,
  LocationEntry,
  TopicEntry,
  TrendSeries,
  TweetRow,
} from "./types.js";

export interface BarSegment {
  label: "positive" | "neutral" | "negative";
  count: number;
  percent: number;
  fraction: number; // of the bar width
}

export interface SentimentBar {
  category: string;
  total: number;
  segments: BarSegment[];
  empty: boolean;
  selected: boolean;
}

const SEGMENT_ORDER: Array<BarSegment["label"]> = ["positive", "neutral", "negative"];

export function sentimentBars(
  categories: string[],
  byCategory: Map<string, CategorySentiment>,
  selectedCategory: string | null,
): SentimentBar[] {
  return categories.map((category) => {
    const data = byCategory.get(category);
    const counts = data?.totals.counts ?? { positive: 0, neutral: 0, negative: 0 };
    const percentages = data?.totals.percentages ?? { positive: 0, neutral: 0, negative: 0 };
    const total = counts.positive + counts.neutral + counts.negative;
    return {
      category,
      total,
      empty: total === 0,
      selected: category === selectedCategory,
      segments: SEGMENT_ORDER.map((label) => ({
        label,
        count: counts[label],
        percent: percentages[label],
        fraction: total > 0 ? counts[label] / total : 0,
      })),
    };
  });
}

export interface CloudWord {
  phrase: string;
  count: number;
  fontPx: number;
}

export const CLOUD_MIN_PX = 12;
export const CLOUD_MAX_PX = 40;

// Monotone in count, clamped to [CLOUD_MIN_PX, CLOUD_MAX_PX].
export function wordCloud(topics: TopicEntry[]): CloudWord[] {
  if (!topics.length) return [];
  const counts = topics.map((t) => t.count);
  const lo = Math.min(...counts);
  const hi = Math.max(...counts);
  return topics.map((t) => {
    const ratio = hi === lo ? 1 : (t.count - lo) / (hi - lo);
    return {
      phrase: t.phrase,
      count: t.count,
      fontPx: Math.round(CLOUD_MIN_PX + ratio * (CLOUD_MAX_PX - CLOUD_MIN_PX)),
    };
  });
}

export interface TweetListItem {
  id: string;
  text: string;
  createdAt: string;
  sentiment: string;
}

export interface TweetListView {
  topic: string;
  items: TweetListItem[];
  emptyMessage: string | null;
}

export function tweetList(topic: string, tweets: TweetRow[] | null): TweetListView {
  if (!tweets || tweets.length === 0) {
    return { topic, items: [], emptyMessage: "No tweets for this topic (it may have been re-analyzed away)." };
  }
  return {
    topic,
    items: tweets.map((t) => ({
      id: t.id,
      text: t.text,
      createdAt: t.created_at,
      sentiment: t.sentiment,
    })),
    emptyMessage: null,
  };
}

export interface LinePoint {
  bucketStart: string;
  value: number;
  x: number; // 0..1 across the chart
  y: number; // 0..1 where 0 is the bottom
}

export interface ChartLine {
  label: string;
  points: LinePoint[];
}

export interface LineChartView {
  lines: ChartLine[];
  maxValue: number;
  empty: boolean;
}

interface RawSeries {
  label: string;
  points: Array<{ bucket_start: string; value: number }>;
}

function clipToRange(
  points: Array<{ bucket_start: string; value: number }>,
  from: string | null,
  to: string | null,
) {
  return points.filter(
    (p) => (!from || p.bucket_start >= from) && (!to || p.bucket_start < to),
  );
}

function buildChart(series: RawSeries[], from: string | null, to: string | null): LineChartView {
  const clipped = series.map((s) => ({ label: s.label, points: clipToRange(s.points, from, to) }));
  const values = clipped.flatMap((s) => s.points.map((p) => p.value));
  const maxValue = values.length ? Math.max(...values) : 0;
  const lines = clipped.map((s) => {
    const n = s.points.length;
    return {
      label: s.label,
      points: s.points.map((p, i) => ({
        bucketStart: p.bucket_start,
        value: p.value,
        x: n > 1 ? i / (n - 1) : 0.5,
        y: maxValue > 0 ? p.value / maxValue : 0,
      })),
    };
  });
  return { lines, maxValue, empty: values.length === 0 };
}

export function correlationTrendChart(
  series: TrendSeries[],
  from: string | null = null,
  to: string | null = null,
): LineChartView {
  return buildChart(
    series.map((s) => ({
      label: s.pair.join(" × "),
      points: s.points.map((p) => ({ bucket_start: p.bucket_start, value: p.weight })),
    })),
    from,
    to,
  );
}

export function hashtagTrendChart(
  series: HashtagSeries[],
  from: string | null = null,
  to: string | null = null,
): LineChartView {
  return buildChart(
    series.map((s) => ({
      label: `#${s.tag}`,
      points: s.points.map((p) => ({ bucket_start: p.bucket_start, value: p.count })),
    })),
    from,
    to,
  );
}

export type LocationSortKey = "count" | "place";

export interface LocationTableView {
  rows: LocationEntry[];
  sortKey: LocationSortKey;
}

export function locationTable(
  locations: LocationEntry[],
  sortKey: LocationSortKey = "count",
): LocationTableView {
  const rows = [...locations].sort((a, b) =>
    sortKey === "count" ? b.count - a.count || a.place.localeCompare(b.place) : a.place.localeCompare(b.place),
  );
  return { rows, sortKey };
}
