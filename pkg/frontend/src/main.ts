import { ApiClient } from "./api.js";
import { DashboardController } from "./controller.js";
import { DomRenderer } from "./dom.js";

function inputValue(id: string): string | null {
  const el = document.getElementById(id) as HTMLInputElement | null;
  const value = el?.value.trim();
  return value ? value : null;
}

function toIso(dateValue: string | null): string | null {
  return dateValue ? `${dateValue}T00:00:00Z` : null;
}

window.addEventListener("DOMContentLoaded", () => {
  const api = new ApiClient("");
  const renderer = new DomRenderer();
  const controller = new DashboardController(api, renderer);
  renderer.bind({
    onCategoryClick: (category) => void controller.clickCategory(category),
    onTopicClick: (topic) => void controller.clickTopic(topic),
    onClearSelection: () => void controller.clearSelection(),
  });

  document.getElementById("apply-filters")?.addEventListener("click", () => {
    void controller.changeTimeRange(toIso(inputValue("filter-from")), toIso(inputValue("filter-to")));
  });
  document.getElementById("clear-selection")?.addEventListener("click", () => {
    void controller.clearSelection();
  });
  document.getElementById("tweet-popup-close")?.addEventListener("click", () => {
    document.getElementById("tweet-popup")?.classList.add("hidden");
  });

  void controller.init();
});
