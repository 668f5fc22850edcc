#include "reslat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace reslat {

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw PositionedError(ErrorKind::FormatError, line,
                        "line " + std::to_string(line) + ": " + what);
}

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ws(raw);
    Line line{number, {}};
    std::string w;
    while (ws >> w) line.words.push_back(w);
    if (line.words.empty() || line.words[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t to_natural(const std::string& w, std::size_t line) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || end != w.data() + w.size()) {
    format_error(line, "expected a natural number, found '" + w + "'");
  }
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return i_ == lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  const Line& next(const char* expecting) {
    if (done()) format_error(last_line(), std::string("unexpected end of file, expected ") + expecting);
    return lines_[i_++];
  }
  const Line& peek() const { return lines_[i_]; }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
};

Element index_in_range(const std::string& w, std::size_t n, std::size_t line) {
  const std::uint64_t v = to_natural(w, line);
  if (v >= n) {
    format_error(line, "index " + w + " out of range for size " + std::to_string(n));
  }
  return static_cast<Element>(v);
}

const Line& keyword_line(Cursor& c, const char* key, std::size_t arity) {
  const Line& l = c.next(key);
  if (l.words[0] != key) format_error(l.number, std::string("expected '") + key + "'");
  if (l.words.size() != arity + 1) {
    format_error(l.number, std::string("'") + key + "' takes " + std::to_string(arity) +
                               (arity == 1 ? " value" : " values"));
  }
  return l;
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
  Cursor c(significant_lines(text));
  AlgebraFile file;

  const Line& head = c.next("'algebra'");
  if (head.words[0] != "algebra" || head.words.size() != 2) {
    format_error(head.number, "expected 'algebra <name>'");
  }
  file.name = head.words[1];

  const Line& size_line = keyword_line(c, "size", 1);
  const std::uint64_t n64 = to_natural(size_line.words[1], size_line.number);
  if (n64 == 0 || n64 > 4096) format_error(size_line.number, "size must be in 1..4096");
  const std::size_t n = n64;
  AlgebraTables& t = file.tables;
  t.size = n;
  t.leq.assign(n * n, 0);

  const Line& shape = c.next("'chain' or 'order'");
  if (shape.words.size() != 1 || (shape.words[0] != "chain" && shape.words[0] != "order")) {
    format_error(shape.number, "expected 'chain' or 'order'");
  }
  if (shape.words[0] == "chain") {
    file.chain = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) t.leq[i * n + j] = 1;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) t.leq[i * n + i] = 1;
    while (!c.done() && c.peek().words[0] != "e") {
      const Line& l = c.next("covering pair");
      if (l.words.size() != 2) format_error(l.number, "expected a covering pair 'i j'");
      const Element i = index_in_range(l.words[0], n, l.number);
      const Element j = index_in_range(l.words[1], n, l.number);
      t.leq[i * n + j] = 1;
    }
    // Reflexive-transitive closure of the covering pairs.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!t.leq[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (t.leq[k * n + j]) t.leq[i * n + j] = 1;
        }
      }
    }
  }

  Element* slots[] = {&t.constants.e, &t.constants.f, &t.constants.bot, &t.constants.top};
  const char* keys[] = {"e", "f", "bot", "top"};
  for (std::size_t i = 0; i < 4; ++i) {
    const Line& l = keyword_line(c, keys[i], 1);
    *slots[i] = index_in_range(l.words[1], n, l.number);
  }

  keyword_line(c, "product", 0);
  t.product.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    const Line& l = c.next("product row");
    if (l.words.size() != n) {
      format_error(l.number, "product row has " + std::to_string(l.words.size()) +
                                 " entries, expected " + std::to_string(n));
    }
    for (const std::string& w : l.words) t.product.push_back(index_in_range(w, n, l.number));
  }
  if (!c.done()) format_error(c.peek().number, "unexpected content after the product table");
  return file;
}

std::string format_algebra(const AlgebraFile& file) {
  const AlgebraTables& t = file.tables;
  const std::size_t n = t.size;
  std::ostringstream os;
  os << "algebra " << file.name << '\n' << "size " << n << '\n';
  if (file.chain) {
    os << "chain\n";
  } else {
    os << "order\n";
    auto lt = [&](std::size_t i, std::size_t j) { return i != j && t.leq[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!lt(i, j)) continue;
        bool covers = true;
        for (std::size_t k = 0; k < n && covers; ++k) covers = !(lt(i, k) && lt(k, j));
        if (covers) os << i << ' ' << j << '\n';
      }
    }
  }
  os << "e " << t.constants.e << '\n'
     << "f " << t.constants.f << '\n'
     << "bot " << t.constants.bot << '\n'
     << "top " << t.constants.top << '\n'
     << "product\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << t.product[i * n + j];
    os << '\n';
  }
  return os.str();
}

AlgebraFile to_file(const FiniteResiduatedLattice& a, const std::string& name) {
  return AlgebraFile{name, a.is_canonical_chain(), a.tables()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "error reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out.flush()) throw Error(ErrorKind::IoError, "error writing '" + path + "'");
}

AlgebraFile load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

void save_algebra(const AlgebraFile& file, const std::string& path) {
  write_file(path, format_algebra(file));
}

NatVecSeq parse_sequence(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) format_error(1, "missing dimension line");
  if (lines[0].words.size() != 1) format_error(lines[0].number, "expected the dimension k");
  NatVecSeq seq;
  seq.k = to_natural(lines[0].words[0], lines[0].number);
  if (seq.k == 0) format_error(lines[0].number, "dimension must be positive");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words.size() != seq.k) {
      format_error(l.number, "tuple has " + std::to_string(l.words.size()) +
                                 " components, expected " + std::to_string(seq.k));
    }
    std::vector<std::uint64_t> tuple;
    for (const std::string& w : l.words) tuple.push_back(to_natural(w, l.number));
    seq.entries.push_back(std::move(tuple));
  }
  return seq;
}

NatVecSeq load_sequence(const std::string& path) { return parse_sequence(read_file(path)); }

}  // namespace reslat
