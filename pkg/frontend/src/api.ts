// Typed client for the twinsight API. The fetch implementation is
// injectable so tests can point it anywhere or fake it entirely.

import type {
  CategorySentiment,
  CategoryTopics,
  CorrelationTrends,
  Correlations,
  HashtagTrends,
  LocationsSummary,
  TopicTweets,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export interface SentimentQuery {
  from?: string | null;
  to?: string | null;
  bucket?: string | null;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, { signal });
    if (!response.ok) {
      let message = `request failed with ${response.status}`;
      try {
        const body = (await response.json()) as { error?: { message?: string } };
        if (body.error?.message) message = body.error.message;
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(response.status, message);
    }
    return (await response.json()) as T;
  }

  categories(signal?: AbortSignal): Promise<string[]> {
    return this.get("/api/categories", signal);
  }

  categorySentiment(
    category: string,
    query: SentimentQuery = {},
    signal?: AbortSignal,
  ): Promise<CategorySentiment> {
    const params = new URLSearchParams();
    if (query.from) params.set("from", query.from);
    if (query.to) params.set("to", query.to);
    if (query.bucket) params.set("bucket", query.bucket);
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.get(`/api/categories/${encodeURIComponent(category)}/sentiment${suffix}`, signal);
  }

  categoryTopics(category: string, limit: number, signal?: AbortSignal): Promise<CategoryTopics> {
    return this.get(
      `/api/categories/${encodeURIComponent(category)}/topics?limit=${limit}`,
      signal,
    );
  }

  topicTweets(phrase: string, category?: string | null, signal?: AbortSignal): Promise<TopicTweets> {
    const suffix = category ? `?category=${encodeURIComponent(category)}` : "";
    return this.get(`/api/topics/${encodeURIComponent(phrase)}/tweets${suffix}`, signal);
  }

  correlations(
    opts: { topic?: string | null; category?: string | null; top?: number },
    signal?: AbortSignal,
  ): Promise<Correlations> {
    const params = new URLSearchParams();
    if (opts.topic) params.set("topic", opts.topic);
    if (opts.category) params.set("category", opts.category);
    params.set("top", String(opts.top ?? 5));
    return this.get(`/api/correlations?${params.toString()}`, signal);
  }

  correlationTrends(
    pairs: Array<[string, string]> | null,
    bucket: string | null,
    signal?: AbortSignal,
  ): Promise<CorrelationTrends> {
    const params = new URLSearchParams();
    if (pairs && pairs.length) params.set("pairs", pairs.map((p) => p.join("|")).join(","));
    if (bucket) params.set("bucket", bucket);
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.get(`/api/correlations/trends${suffix}`, signal);
  }

  hashtagTrends(tags: string[] | null, bucket: string | null, signal?: AbortSignal): Promise<HashtagTrends> {
    const params = new URLSearchParams();
    if (tags && tags.length) params.set("tags", tags.join(","));
    if (bucket) params.set("bucket", bucket);
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.get(`/api/hashtags/trends${suffix}`, signal);
  }

  locationsSummary(signal?: AbortSignal): Promise<LocationsSummary> {
    return this.get("/api/locations/summary", signal);
  }
}
