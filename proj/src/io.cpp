#include "cobrack/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cobrack/error.hpp"

namespace cobrack {
namespace {

using Json = nlohmann::ordered_json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Json letters_json(std::span<const Letter> w) {
  Json a = Json::array();
  for (const Letter x : w) a.push_back(Json::array({x.gen, x.sign}));
  return a;
}

Word letters_from_json(const Json& a, const char* field) {
  if (!a.is_array()) throw ParseError(std::string("field '") + field + "' is not an array", 0);
  Word w;
  for (const Json& x : a) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() ||
        !x[1].is_number_integer()) {
      throw ParseError(std::string("malformed letter in '") + field + "'", 0);
    }
    const int gen = x[0].get<int>();
    const int sign = x[1].get<int>();
    if (gen < 1 || (sign != 1 && sign != -1)) {
      throw ParseError(std::string("invalid letter in '") + field + "'", 0);
    }
    w.push_back(Letter{gen, sign});
  }
  return w;
}

Json coefficient_json(const Coefficient& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(c));
  }
  return Json(c.str());
}

Coefficient coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return Coefficient(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Coefficient(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("coefficient is not an integer", 0);
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw ParseError(std::string("missing field '") + name + "'", 0);
  return doc.at(name);
}

std::string bracket(std::span<const Letter> w) { return "[" + to_string(w) + "]"; }

}  // namespace

Word parse_word(std::string_view text, Genus g) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text[i] != 'c' && text[i] != 'C') {
      throw ParseError("expected 'c' at offset " + std::to_string(start), start);
    }
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    const std::size_t digits = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == digits) {
      throw ParseError("expected a generator index at offset " + std::to_string(digits), digits);
    }
    if (i - digits > 6) {
      throw ParseError("generator index too large at offset " + std::to_string(digits), digits);
    }
    const int index = std::stoi(std::string(text.substr(digits, i - digits)));
    int sign = 1;
    if (i < text.size() && text[i] == '-') {
      sign = -1;
      ++i;
    } else if (text.substr(i, 3) == "^-1") {
      sign = -1;
      i += 3;
    }
    if (i < text.size() && !is_space(text[i])) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at offset " +
                           std::to_string(i),
                       i);
    }
    if (index < 1 || index > g.generators()) {
      throw ParseError("generator index " + std::to_string(index) + " at offset " +
                           std::to_string(start) + " is outside 1.." +
                           std::to_string(g.generators()) + " for genus " +
                           std::to_string(g.value()),
                       start);
    }
    w.push_back(Letter{index, sign});
  }
  return w;
}

ResultDocument make_document(const Normalizer& norm, std::span<const Letter> raw,
                             std::span<const Letter> word, int level, const FormalSum& sum,
                             std::string engine) {
  ResultDocument doc;
  doc.genus = norm.genus().value();
  doc.raw.assign(raw.begin(), raw.end());
  doc.word.assign(word.begin(), word.end());
  doc.mode = std::string(to_string(norm.mode()));
  doc.level = level;
  for (const auto& [key, c] : sum.terms()) {
    doc.terms.push_back(DocumentTerm{key[0].letters(), key[1].letters(), c});
  }
  doc.engine = std::move(engine);
  return doc;
}

std::string to_json(const ResultDocument& doc) {
  Json j;
  j["genus"] = doc.genus;
  j["raw"] = letters_json(doc.raw);
  j["word"] = letters_json(doc.word);
  j["mode"] = doc.mode;
  j["level"] = doc.level;
  Json terms = Json::array();
  for (const DocumentTerm& t : doc.terms) {
    Json term;
    term["left"] = letters_json(t.left);
    term["right"] = letters_json(t.right);
    term["coeff"] = coefficient_json(t.coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  j["engine"] = doc.engine;
  return j.dump();
}

ResultDocument document_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("result document is not an object", 0);
  try {
    ResultDocument doc;
    doc.genus = field(j, "genus").get<int>();
    doc.word = letters_from_json(field(j, "word"), "word");
    doc.raw = j.contains("raw") ? letters_from_json(j.at("raw"), "raw") : doc.word;
    doc.mode = field(j, "mode").get<std::string>();
    doc.level = field(j, "level").get<int>();
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("field 'terms' is not an array", 0);
    for (const Json& t : terms) {
      doc.terms.push_back(DocumentTerm{letters_from_json(field(t, "left"), "left"),
                                       letters_from_json(field(t, "right"), "right"),
                                       coefficient_from_json(field(t, "coeff"))});
    }
    doc.engine = field(j, "engine").get<std::string>();
    return doc;
  } catch (const Json::type_error& e) {
    throw ParseError(std::string("wrong field type: ") + e.what(), 0);
  }
}

std::string format_sum_text(const FormalSum& sum) {
  if (sum.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : sum.terms()) {
    if (!first) os << ' ';
    first = false;
    os << (c < 0 ? "- " : "+ ");
    const Coefficient a = c < 0 ? Coefficient(-c) : c;
    if (a != 1) os << a << ' ';
    os << key[0] << " x " << key[1];
  }
  return os.str();
}

std::string to_text(const ResultDocument& doc) {
  std::ostringstream os;
  os << bracket(doc.word) << "  genus " << doc.genus << ", " << doc.mode << ", level "
     << doc.level;
  if (doc.engine != "combinatorial") os << ", " << doc.engine;
  os << '\n';
  if (doc.terms.empty()) {
    os << "  0\n";
    return os.str();
  }
  for (const DocumentTerm& t : doc.terms) {
    os << "  " << (t.coeff < 0 ? "- " : "+ ");
    const Coefficient a = t.coeff < 0 ? Coefficient(-t.coeff) : t.coeff;
    if (a != 1) os << a << ' ';
    os << bracket(t.left) << " x " << bracket(t.right) << '\n';
  }
  return os.str();
}

std::string to_latex(std::span<const Letter> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    s += "c_{" + std::to_string(w[i].gen) + "}";
    if (w[i].sign < 0) s += "^{-1}";
  }
  return s;
}

std::string to_latex(const ResultDocument& doc) {
  if (doc.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const DocumentTerm& t : doc.terms) {
    if (t.coeff < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const Coefficient a = t.coeff < 0 ? Coefficient(-t.coeff) : t.coeff;
    if (a != 1) os << a << ' ';
    os << '[' << to_latex(t.left) << "]\\times[" << to_latex(t.right) << ']';
  }
  return os.str();
}

}  // namespace cobrack
