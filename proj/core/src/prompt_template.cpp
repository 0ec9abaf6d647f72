#include "pgxrag/prompt_template.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <vector>

#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"

namespace pgxrag {
namespace {

struct Segment {
  bool placeholder;
  std::string_view value;  // literal text or placeholder name
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Segment> parse(std::string_view text) {
  std::vector<Segment> out;
  std::size_t literal_begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{' && i + 1 < text.size() && ident_start(text[i + 1])) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (j < text.size() && text[j] == '}') {
        if (i > literal_begin) out.push_back({false, text.substr(literal_begin, i - literal_begin)});
        out.push_back({true, text.substr(i + 1, j - i - 1)});
        i = j + 1;
        literal_begin = i;
        continue;
      }
    }
    ++i;
  }
  if (literal_begin < text.size()) out.push_back({false, text.substr(literal_begin)});
  return out;
}

bool known_placeholder(std::string_view name) {
  return std::find(kPlaceholderNames.begin(), kPlaceholderNames.end(), name) !=
         kPlaceholderNames.end();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, "template not found: " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string render_segments(const std::vector<Segment>& segments, const Bindings& bindings) {
  std::set<std::string_view> used;
  for (const auto& s : segments) {
    if (!s.placeholder) continue;
    if (!known_placeholder(s.value)) {
      fail(ErrorCode::UnknownPlaceholder, "unknown placeholder '" + std::string(s.value) + "'");
    }
    if (!bindings.contains(s.value)) {
      fail(ErrorCode::MissingBinding, "missing binding '" + std::string(s.value) + "'");
    }
    used.insert(s.value);
  }
  for (const auto& [name, _] : bindings) {
    if (!used.contains(name)) {
      fail(ErrorCode::UnknownPlaceholder,
           "binding '" + name + "' does not match any placeholder in the template");
    }
  }
  std::string out;
  for (const auto& s : segments) {
    out += s.placeholder ? bindings.find(s.value)->second : std::string(s.value);
  }
  return out;
}

}  // namespace

std::string_view template_file_name(TemplateId id) noexcept {
  switch (id) {
    case TemplateId::Layer1System: return "layer1_system.txt";
    case TemplateId::Layer1User: return "layer1_user.txt";
    case TemplateId::Layer2System: return "layer2_system.txt";
    case TemplateId::Layer2User: return "layer2_user.txt";
  }
  return "";
}

PromptTemplate::PromptTemplate(TemplateId id, std::string text) : id_(id), text_(std::move(text)) {
  for (const auto& s : parse(text_)) {
    if (!s.placeholder) continue;
    if (!known_placeholder(s.value)) {
      fail(ErrorCode::UnknownPlaceholder, "template " + std::string(template_file_name(id_)) +
                                              " uses unknown placeholder '" +
                                              std::string(s.value) + "'");
    }
    placeholders_.emplace(s.value);
  }
}

std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings) {
  return render_segments(parse(tmpl.text()), bindings);
}

std::string render_prompt(std::string_view text, const Bindings& bindings) {
  return render_segments(parse(text), bindings);
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  auto make = [&](TemplateId id) {
    return PromptTemplate(id, read_file(dir / template_file_name(id)));
  };
  return TemplateSet{make(TemplateId::Layer1System), make(TemplateId::Layer1User),
                     make(TemplateId::Layer2System), make(TemplateId::Layer2User)};
}

std::string TemplateSet::digest() const {
  std::string all;
  for (const auto* t : {&layer1_system, &layer1_user, &layer2_system, &layer2_user}) {
    all += t->text();
    all += '\x1e';
  }
  return sha256_hex(all);
}

}  // namespace pgxrag
