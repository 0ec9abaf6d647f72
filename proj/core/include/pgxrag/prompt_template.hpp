#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace pgxrag {

enum class TemplateId { Layer1System, Layer1User, Layer2System, Layer2User };

std::string_view template_file_name(TemplateId id) noexcept;

inline constexpr std::array<std::string_view, 5> kPlaceholderNames = {
    "source", "query", "content", "user_input", "all_summaries"};

using Bindings = std::map<std::string, std::string, std::less<>>;

// Text with {name} placeholders. A '{' that does not open an identifier
// followed by '}' is literal text.
class PromptTemplate {
 public:
  // Throws UnknownPlaceholder if the text uses a name outside kPlaceholderNames.
  PromptTemplate(TemplateId id, std::string text);

  TemplateId id() const noexcept { return id_; }
  const std::string& text() const noexcept { return text_; }
  const std::set<std::string, std::less<>>& placeholders() const noexcept { return placeholders_; }

 private:
  TemplateId id_;
  std::string text_;
  std::set<std::string, std::less<>> placeholders_;
};

// Single-pass literal substitution. Bindings must name exactly the
// template's placeholders: a missing one raises MissingBinding, an extra
// one UnknownPlaceholder.
std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings);

// Renders an arbitrary template string under the same rules (used for ad hoc
// templates and tests).
std::string render_prompt(std::string_view text, const Bindings& bindings);

struct TemplateSet {
  PromptTemplate layer1_system;
  PromptTemplate layer1_user;
  PromptTemplate layer2_system;
  PromptTemplate layer2_user;

  // Reads layer1_system.txt, layer1_user.txt, layer2_system.txt and
  // layer2_user.txt byte-for-byte.
  static TemplateSet load(const std::filesystem::path& dir);

  std::string digest() const;
};

}  // namespace pgxrag
