// Payload shapes of the twinsight read-only API.

export interface PolarityCounts {
  positive: number;
  neutral: number;
  negative: number;
}

export interface SentimentBucket {
  category: string;
  bucket_start: string;
  counts: PolarityCounts;
  percentages: PolarityCounts;
}

export interface CategorySentiment {
  category: string;
  bucket_seconds: number;
  buckets: SentimentBucket[];
  totals: { counts: PolarityCounts; percentages: PolarityCounts };
}

export interface TopicEntry {
  phrase: string;
  count: number;
}

export interface CategoryTopics {
  category: string;
  topics: TopicEntry[];
}

export interface TweetRow {
  id: string;
  text: string;
  created_at: string;
  author: string;
  sentiment: string;
}

export interface TopicTweets {
  topic: string;
  tweets: TweetRow[];
}

export interface Correlation {
  pair: [string, string];
  count: number;
  weight: number;
}

export interface Correlations {
  mode: string;
  topic: string | null;
  category: string | null;
  correlations: Correlation[];
}

export interface TrendPoint {
  bucket_start: string;
  weight: number;
}

export interface TrendSeries {
  pair: [string, string];
  points: TrendPoint[];
}

export interface CorrelationTrends {
  bucket_seconds: number;
  series: TrendSeries[];
}

export interface HashtagPoint {
  bucket_start: string;
  count: number;
}

export interface HashtagSeries {
  tag: string;
  points: HashtagPoint[];
}

export interface HashtagTrends {
  bucket_seconds: number;
  series: HashtagSeries[];
}

export interface LocationEntry {
  place: string;
  count: number;
  lat: number | null;
  lon: number | null;
}

export interface LocationsSummary {
  locations: LocationEntry[];
}
