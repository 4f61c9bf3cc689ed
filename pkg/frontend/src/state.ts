// Dashboard view state and its pure transition functions.
//
// Invariants kept by every transition:
//  - selectedTopic is always one of the selected category's known topics;
//  - clearing (or switching) the category clears the topic.

export interface TimeRange {
  from: string | null;
  to: string | null;
}

export interface ViewState {
  categories: string[];
  selectedCategory: string | null;
  selectedTopic: string | null;
  categoryTopics: string[];
  timeRange: TimeRange;
  locationFilter: string | null;
  extractor: string;
}

export function initialState(extractor = "rake"): ViewState {
  return {
    categories: [],
    selectedCategory: null,
    selectedTopic: null,
    categoryTopics: [],
    timeRange: { from: null, to: null },
    locationFilter: null,
    extractor,
  };
}

export function setCategories(state: ViewState, categories: string[]): ViewState {
  const next = { ...state, categories: [...categories] };
  if (state.selectedCategory && !categories.includes(state.selectedCategory)) {
    return clearCategory(next);
  }
  return next;
}

export function selectCategory(state: ViewState, category: string | null): ViewState {
  if (category === null) {
    return clearCategory(state);
  }
  if (!state.categories.includes(category)) {
    return state;
  }
  if (category === state.selectedCategory) {
    return state;
  }
  // switching category invalidates the topic list and the topic with it
  return {
    ...state,
    selectedCategory: category,
    selectedTopic: null,
    categoryTopics: [],
  };
}

export function clearCategory(state: ViewState): ViewState {
  return { ...state, selectedCategory: null, selectedTopic: null, categoryTopics: [] };
}

export function setCategoryTopics(state: ViewState, topics: string[]): ViewState {
  const next = { ...state, categoryTopics: [...topics] };
  if (state.selectedTopic && !topics.includes(state.selectedTopic)) {
    next.selectedTopic = null;
  }
  return next;
}

export function selectTopic(state: ViewState, topic: string): ViewState {
  if (state.selectedCategory === null || !state.categoryTopics.includes(topic)) {
    return state;
  }
  return { ...state, selectedTopic: topic };
}

export function clearTopic(state: ViewState): ViewState {
  return { ...state, selectedTopic: null };
}

export function setTimeRange(state: ViewState, from: string | null, to: string | null): ViewState {
  return { ...state, timeRange: { from, to } };
}

export function setLocationFilter(state: ViewState, location: string | null): ViewState {
  return { ...state, locationFilter: location };
}

export function setExtractor(state: ViewState, extractor: string): ViewState {
  return { ...state, extractor };
}

export function invariantsHold(state: ViewState): boolean {
  if (state.selectedTopic !== null) {
    if (state.selectedCategory === null) return false;
    if (!state.categoryTopics.includes(state.selectedTopic)) return false;
  }
  if (state.selectedCategory !== null && !state.categories.includes(state.selectedCategory)) {
    return false;
  }
  return true;
}
