#include "opalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace opalg {

namespace {

enum class Tok {
  ident,
  number,
  lam,
  lbracket,
  rbracket,
  lparen,
  rparen,
  plus,
  minus,
  star,
  slash,
  caret,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto push = [&](Tok k, std::string t, std::size_t p) {
    out.push_back({k, std::move(t), p});
  };
  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t p = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
        num.push_back(src[i++]);
      push(Tok::number, num, p);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                       src[i] == '_' || src[i] == '\''))
        id.push_back(src[i++]);
      if (id == "L" || id == "lambda")
        push(Tok::lam, id, p);
      else
        push(Tok::ident, id, p);
      continue;
    }
    // UTF-8 lambda
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < n &&
        static_cast<unsigned char>(src[i + 1]) == 0xBB) {
      push(Tok::lam, "lambda", p);
      i += 2;
      continue;
    }
    switch (c) {
      case '[': push(Tok::lbracket, "[", p); break;
      case ']': push(Tok::rbracket, "]", p); break;
      case '(': push(Tok::lparen, "(", p); break;
      case ')': push(Tok::rparen, ")", p); break;
      case '+': push(Tok::plus, "+", p); break;
      case '-': push(Tok::minus, "-", p); break;
      case '*': push(Tok::star, "*", p); break;
      case '/': push(Tok::slash, "/", p); break;
      case '^': push(Tok::caret, "^", p); break;
      default:
        throw ParseError(p, std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  out.push_back({Tok::end, "", n});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet, Mode mode)
      : toks_(lex(text)), alphabet_(alphabet), mode_(mode) {}

  OpPoly poly() {
    OpPoly out;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      negative = true;
      next();
    } else if (peek().kind == Tok::plus) {
      next();
    }
    out += term(negative);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool neg = next().kind == Tok::minus;
      out += term(neg);
    }
    expect(Tok::end, "unexpected trailing input");
    return out;
  }

  Word word_only() {
    if (!starts_word())
      throw ParseError(peek().pos, "expected a word");
    Word w = word();
    expect(Tok::end, "unexpected trailing input");
    return w;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect(Tok k, const std::string& msg) {
    if (peek().kind != k) throw ParseError(peek().pos, msg);
    next();
  }

  bool starts_coeff_atom(std::size_t ahead = 0) const {
    Tok k = peek(ahead).kind;
    return k == Tok::number || k == Tok::lam || k == Tok::lparen ||
           k == Tok::minus;
  }

  bool starts_word() const {
    Tok k = peek().kind;
    if (k == Tok::ident || k == Tok::lbracket) return true;
    return k == Tok::number && peek().text == "1";
  }

  OpPoly term(bool negative) {
    const std::size_t start = peek().pos;
    Laurent c(1);
    bool saw_coeff = false;
    // A leading "1" is the unit word unless it opens a longer coefficient.
    while (starts_coeff_atom() && peek().kind != Tok::minus &&
           !(peek().kind == Tok::number && peek().text == "1" &&
             !coeff_continues_after_one())) {
      c *= coeff_atom();
      saw_coeff = true;
      if (peek().kind == Tok::star) {
        next();
      } else if (peek().kind == Tok::slash) {
        next();
        c *= coeff_atom().inverse();
      }
    }
    Word w;
    bool saw_word = false;
    if (starts_word()) {
      w = word();
      saw_word = true;
    }
    if (!saw_coeff && !saw_word)
      throw ParseError(peek().pos, "expected a term");
    if (!saw_word && mode_ == Mode::nonunitary && !c.is_zero())
      throw ParseError(start,
                       "scalar terms need the unit, which nonunitary mode "
                       "does not have");
    if (negative) c = -c;
    return OpPoly(w, c);
  }

  // After a lone "1", does the input continue with more coefficient
  // material (so the 1 was a rational)?
  bool coeff_continues_after_one() const {
    Tok k = peek(1).kind;
    return k == Tok::slash || k == Tok::star || k == Tok::number ||
           k == Tok::lam || k == Tok::lparen;
  }

  Laurent coeff_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::minus:
        next();
        return -coeff_atom();
      case Tok::lparen: {
        next();
        Laurent c = coeff_expr();
        expect(Tok::rparen, "expected ')'");
        return c;
      }
      case Tok::number: {
        std::string num = next().text;
        if (peek().kind == Tok::slash && peek(1).kind == Tok::number) {
          next();
          std::string den = next().text;
          if (den == "0") throw ParseError(t.pos, "division by zero");
          return Laurent(rational_from_string(num + "/" + den));
        }
        return Laurent(rational_from_string(num));
      }
      case Tok::lam: {
        next();
        int e = 1;
        if (peek().kind == Tok::caret) {
          next();
          bool neg = false;
          if (peek().kind == Tok::minus) {
            neg = true;
            next();
          }
          if (peek().kind != Tok::number)
            throw ParseError(peek().pos, "expected an exponent");
          e = std::stoi(next().text);
          if (neg) e = -e;
        }
        return Laurent::lambda(e);
      }
      default:
        throw ParseError(t.pos, "expected a coefficient");
    }
  }

  Laurent coeff_expr() {
    Laurent c = coeff_atom();
    while (starts_coeff_atom() || peek().kind == Tok::star ||
           peek().kind == Tok::slash) {
      if (peek().kind == Tok::star) {
        next();
        c *= coeff_atom();
      } else if (peek().kind == Tok::slash) {
        next();
        c *= coeff_atom().inverse();
      } else {
        c *= coeff_atom();
      }
    }
    return c;
  }

  Word word() {
    const Token& t = peek();
    if (t.kind == Tok::number && t.text == "1") {
      next();
      if (mode_ == Mode::nonunitary)
        throw ParseError(t.pos, "the unit '1' is not a nonunitary word");
      return Word();
    }
    std::vector<Prime> fs;
    while (true) {
      const Token& u = peek();
      if (u.kind == Tok::ident) {
        const int rank = alphabet_.rank_of(u.text);
        if (rank < 0)
          throw ParseError(u.pos, "unknown letter '" + u.text + "'");
        next();
        Prime p;
        p.letter = rank;
        fs.push_back(p);
      } else if (u.kind == Tok::lbracket) {
        next();
        Word payload = word();
        expect(Tok::rbracket, "expected ']'");
        Prime p;
        p.inner = payload.node();
        fs.push_back(p);
      } else {
        break;
      }
    }
    if (fs.empty()) throw ParseError(t.pos, "expected a word");
    return Word::from_factors(std::move(fs));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
  Mode mode_;
};

}  // namespace

OpPoly parse_poly(const std::string& text, const Alphabet& alphabet,
                  Mode mode) {
  Parser p(text, alphabet, mode);
  OpPoly out = p.poly();
  out.check_mode(mode);
  return out;
}

Word parse_word(const std::string& text, const Alphabet& alphabet, Mode mode) {
  Parser p(text, alphabet, mode);
  Word w = p.word_only();
  check_mode(w, mode);
  if (mode == Mode::nonunitary) OpPoly(w).check_mode(mode);
  return w;
}

namespace {

void render_word_into(const Word& w, const Alphabet& alphabet,
                      std::string& out) {
  if (w.is_unit()) {
    out += "1";
    return;
  }
  bool prev_letter = false;
  for (const Prime& f : w.factors()) {
    if (f.is_letter()) {
      if (prev_letter) out += " ";
      out += alphabet.name(f.letter);
      prev_letter = true;
    } else {
      out += "[";
      render_word_into(Word::of_node(f.inner), alphabet, out);
      out += "]";
      prev_letter = false;
    }
  }
}

}  // namespace

std::string render_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  render_word_into(w, alphabet, out);
  return out;
}

std::string render_poly(const OpPoly& f, const Alphabet& alphabet,
                        OrderKind kind) {
  if (f.is_zero()) return "0";
  std::vector<Word> words;
  words.reserve(f.term_count());
  for (const auto& [w, c] : f.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return cmp(kind, a, b) > 0; });

  std::string out;
  bool first = true;
  for (const Word& w : words) {
    const Laurent coeff = f.coeff(w);
    for (const auto& [e, c] : coeff.terms()) {
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string coeff_part;
      const bool show_rat = (mag != 1) || (e == 0 && w.is_unit());
      if (show_rat) coeff_part += rational_to_string(mag);
      if (e != 0) {
        if (!coeff_part.empty()) coeff_part += " ";
        coeff_part += "L";
        if (e != 1) coeff_part += "^" + std::to_string(e);
      }
      out += coeff_part;
      if (!w.is_unit()) {
        if (!coeff_part.empty()) out += " ";
        render_word_into(w, alphabet, out);
      }
    }
  }
  return out;
}

std::string render_context(const Context& q, const Alphabet& alphabet) {
  std::string out;
  const auto& layers = q.layers();
  std::string close;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const Prime& f : layers[i].prefix) {
      render_word_into(prime_word(f), alphabet, out);
      if (f.is_letter()) out += " ";
    }
    if (i + 1 < layers.size()) out += "[";
  }
  out += "*";
  for (std::size_t i = layers.size(); i-- > 0;) {
    if (i + 1 < layers.size()) out += "]";
    bool prev_letter = false;
    for (const Prime& f : layers[i].suffix) {
      if (f.is_letter() && prev_letter) out += " ";
      render_word_into(prime_word(f), alphabet, out);
      prev_letter = f.is_letter();
    }
  }
  // tidy stray spaces before brackets/star
  std::string tidy;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == ' ' && i + 1 < out.size() &&
        (out[i + 1] == '[' || out[i + 1] == '*'))
      continue;
    tidy += out[i];
  }
  return tidy;
}

std::string render_path(const PathWord& p, const Alphabet& alphabet) {
  std::string out;
  for (PathSymbol s : p) {
    if (!out.empty()) out += " ";
    if (s == kPathP)
      out += "P";
    else if (s == kPathMu)
      out += "mu";
    else
      out += alphabet.name(s);
  }
  return out;
}

std::string render_paths(const std::vector<PathWord>& ps,
                         const Alphabet& alphabet) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_path(ps[i], alphabet);
  }
  out += ")";
  return out;
}

nlohmann::json word_to_json(const Word& w, const Alphabet& alphabet) {
  if (w.is_unit()) return nlohmann::json::array({"one"});
  auto factor_json = [&](const Prime& f) -> nlohmann::json {
    if (f.is_letter()) return alphabet.name(f.letter);
    return nlohmann::json::array(
        {"op", word_to_json(Word::of_node(f.inner), alphabet)});
  };
  if (w.breadth() == 1) return factor_json(w.factors().front());
  nlohmann::json arr = nlohmann::json::array({"cat"});
  for (const Prime& f : w.factors()) arr.push_back(factor_json(f));
  return arr;
}

nlohmann::json laurent_to_json(const Laurent& c) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [e, r] : c.terms())
    obj[std::to_string(e)] = rational_to_string(r);
  return obj;
}

nlohmann::json poly_to_json(const OpPoly& f, const Alphabet& alphabet,
                            OrderKind kind) {
  std::vector<Word> words;
  for (const auto& [w, c] : f.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return cmp(kind, a, b) > 0; });
  nlohmann::json arr = nlohmann::json::array();
  for (const Word& w : words)
    arr.push_back({{"coeff", laurent_to_json(f.coeff(w))},
                   {"word", word_to_json(w, alphabet)}});
  return arr;
}

namespace {

std::string comp_kind_name(CompKind k) {
  return k == CompKind::intersection ? "intersection" : "inclusion";
}

}  // namespace

std::string report_to_text(const GsReport& report) {
  std::ostringstream os;
  std::size_t nontrivial = 0;
  for (const GsEntry& e : report.entries)
    if (!e.trivial) ++nontrivial;
  os << "check-gs " << report.system << ": " << report.entries.size()
     << " compositions, " << nontrivial << " nontrivial\n";
  for (const GsEntry& e : report.entries) {
    os << (e.trivial ? "[trivial]    " : "[NONTRIVIAL] ")
       << comp_kind_name(e.comp.kind) << " w="
       << render_word(e.comp.ambiguity, report.fresh)
       << " left=" << e.comp.left << " right=" << e.comp.right
       << " at=" << render_context(e.comp.context, report.fresh)
       << " nf=" << render_poly(e.nf, report.fresh, report.order) << "\n";
  }
  os << (report.all_trivial() ? "RESULT: ALL TRIVIAL" : "RESULT: NONTRIVIAL")
     << "\n";
  return os.str();
}

nlohmann::json report_to_json(const GsReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const GsEntry& e : report.entries) {
    entries.push_back(
        {{"kind", comp_kind_name(e.comp.kind)},
         {"ambiguity", render_word(e.comp.ambiguity, report.fresh)},
         {"rules",
          nlohmann::json::array({e.comp.left, e.comp.right})},
         {"context", render_context(e.comp.context, report.fresh)},
         {"composition",
          render_poly(e.comp.poly, report.fresh, report.order)},
         {"normal_form", render_poly(e.nf, report.fresh, report.order)},
         {"trivial", e.trivial}});
  }
  return {{"system", report.system},
          {"entries", entries},
          {"all_trivial", report.all_trivial()}};
}

}  // namespace opalg
