#include "sentialg/corpus_io.hpp"

#include <unordered_set>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

namespace {

std::string id_of(const Json& obj, std::size_t line_no) {
  auto it = obj.find("id");
  if (it == obj.end()) throw MalformedLine(line_no, "missing 'id'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw MalformedLine(line_no, "'id' must be a string or integer");
}

template <typename Fn>
void for_each_json_line(std::string_view contents, Fn&& fn) {
  std::size_t line_no = 0;
  for (const auto& raw : split(contents, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedLine(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw MalformedLine(line_no, "expected a JSON object");
    fn(obj, line_no);
  }
}

}  // namespace

std::vector<Message> parse_messages_jsonl(std::string_view contents, std::size_t* skipped) {
  std::vector<Message> out;
  std::unordered_set<std::string> ids;
  std::size_t dropped = 0;
  for_each_json_line(contents, [&](const Json& obj, std::size_t line_no) {
    Message m;
    m.id = id_of(obj, line_no);
    auto text = obj.find("text");
    if (text == obj.end() || !text->is_string()) throw MalformedLine(line_no, "missing string 'text'");
    m.text = text->get<std::string>();
    if (auto src = obj.find("source"); src != obj.end() && src->is_string()) m.source = src->get<std::string>();
    if (trim(m.text).empty()) {
      ++dropped;
      return;
    }
    if (!ids.insert(m.id).second) throw MalformedLine(line_no, "duplicate id '" + m.id + "'");
    out.push_back(std::move(m));
  });
  if (skipped != nullptr) *skipped = dropped;
  return out;
}

std::vector<Message> read_messages_jsonl(const std::filesystem::path& path, std::size_t* skipped) {
  return parse_messages_jsonl(read_file(path), skipped);
}

Json to_json(const MatchTrace& trace) {
  Json spans = Json::array();
  for (const auto& s : trace.spans) {
    spans.push_back(Json{{"ngram", s.ngram},
                         {"matched", s.matched},
                         {"raw", s.raw},
                         {"negated", s.negated},
                         {"applied", s.applied}});
  }
  return spans;
}

Json to_json(const AnnotatedMessage& a) {
  Json obj;
  obj["id"] = a.message.id;
  obj["text"] = a.message.text;
  obj["normalized"] = a.normalized;
  if (a.message.source) obj["source"] = *a.message.source;
  obj["script"] = to_string(a.script);
  obj["score"] = a.score;
  obj["label"] = to_string(a.label);
  obj["trace"] = to_json(a.trace);
  if (!a.trace.negator_conflicts.empty()) obj["negator_conflicts"] = a.trace.negator_conflicts;
  return obj;
}

Json to_json(const LabeledText& item) {
  Json obj;
  obj["id"] = item.id;
  obj["text"] = item.text;
  obj["script"] = to_string(item.script);
  obj["label"] = to_string(item.label);
  if (item.part) obj["split"] = to_string(*item.part);
  return obj;
}

Json to_json(const AnnotationSummary& summary) {
  Json obj;
  obj["total"] = summary.total();
  for (Script script : {Script::Arabic, Script::Arabizi, Script::Mixed}) {
    Json cell;
    for (Label label : {Label::Positive, Label::Negative, Label::Unlabeled}) {
      cell[std::string(to_string(label))] = summary.count(script, label);
    }
    obj[std::string(to_string(script))] = cell;
  }
  return obj;
}

std::vector<LabeledText> parse_labeled_jsonl(std::string_view contents, const NormalizerOptions& options) {
  std::vector<LabeledText> out;
  std::unordered_set<std::string> ids;
  for_each_json_line(contents, [&](const Json& obj, std::size_t line_no) {
    LabeledText item;
    item.id = id_of(obj, line_no);
    auto text = obj.find("text");
    auto label = obj.find("label");
    if (text == obj.end() || !text->is_string()) throw MalformedLine(line_no, "missing string 'text'");
    if (label == obj.end() || !label->is_string()) throw MalformedLine(line_no, "missing string 'label'");
    auto parsed = parse_label(label->get<std::string>());
    if (!parsed) throw MalformedLine(line_no, "unknown label '" + label->get<std::string>() + "'");
    if (*parsed == Label::Unlabeled) return;
    item.label = *parsed;
    item.text = normalize(text->get<std::string>(), options);
    if (auto script = obj.find("script"); script != obj.end() && script->is_string()) {
      auto s = parse_script(script->get<std::string>());
      if (!s) throw MalformedLine(line_no, "unknown script");
      item.script = *s;
    } else {
      item.script = detect_script(item.text);
    }
    if (auto part = obj.find("split"); part != obj.end() && part->is_string()) {
      item.part = parse_split_part(part->get<std::string>());
      if (!item.part) throw MalformedLine(line_no, "unknown split");
    }
    if (!ids.insert(item.id).second) throw MalformedLine(line_no, "duplicate id '" + item.id + "'");
    out.push_back(std::move(item));
  });
  return out;
}

std::vector<LabeledText> read_labeled_jsonl(const std::filesystem::path& path, const NormalizerOptions& options) {
  return parse_labeled_jsonl(read_file(path), options);
}

}  // namespace sentialg
