#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sentialg/annotator.hpp"
#include "sentialg/normalizer.hpp"
#include "sentialg/split.hpp"

namespace sentialg {

using Json = nlohmann::ordered_json;

// Raw corpus: one `{"id", "text", "source"?}` object per line. Blank lines
// and messages whose text is empty after trimming are skipped; duplicate ids
// are rejected.
std::vector<Message> parse_messages_jsonl(std::string_view contents, std::size_t* skipped = nullptr);
std::vector<Message> read_messages_jsonl(const std::filesystem::path& path, std::size_t* skipped = nullptr);

Json to_json(const MatchTrace& trace);
Json to_json(const AnnotatedMessage& annotated);
Json to_json(const LabeledText& item);
Json to_json(const AnnotationSummary& summary);

// Serializes one JSON value per line, each terminated by '\n'.
template <typename T>
std::string to_jsonl(const std::vector<T>& items) {
  std::string out;
  for (const auto& item : items) {
    out += to_json(item).dump();
    out += '\n';
  }
  return out;
}

// Gold or silver labeled messages: `{"id", "text", "label", "script"?, "split"?}`.
// Annotated-corpus lines are accepted too; unlabeled records are skipped.
// Text is normalized on read and the script is detected when absent.
std::vector<LabeledText> parse_labeled_jsonl(std::string_view contents, const NormalizerOptions& options = {});
std::vector<LabeledText> read_labeled_jsonl(const std::filesystem::path& path,
                                            const NormalizerOptions& options = {});

}  // namespace sentialg
