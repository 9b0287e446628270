#include "planar_turan/graph6.hpp"

#include "planar_turan/error.hpp"

namespace planar_turan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;

void put_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back(126);
  if (groups == 6) out.push_back(126);
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  }
}

class Reader {
 public:
  Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }

  unsigned value() {
    if (done()) throw ParseError("graph6 data truncated", base_ + pos_);
    const auto c = static_cast<unsigned char>(text_[pos_]);
    if (c < kBias || c > 126) throw ParseError("byte outside the graph6 range", base_ + pos_);
    ++pos_;
    return c - kBias;
  }

  std::size_t order() {
    if (done()) throw ParseError("empty graph6 string", base_ + pos_);
    if (static_cast<unsigned char>(text_[pos_]) != 126) return value();
    ++pos_;
    int groups = 3;
    if (!done() && static_cast<unsigned char>(text_[pos_]) == 126) {
      ++pos_;
      groups = 6;
    }
    const std::size_t start = pos_;
    std::size_t n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | value();
    if ((groups == 3 && n < 63) || (groups == 6 && n <= 258047)) {
      throw ParseError("non-minimal graph6 order encoding", base_ + start);
    }
    return n;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

Graph decode_at(std::string_view text, std::size_t base) {
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base += kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  Reader r(text, base);
  const std::size_t n = r.order();
  if (n > kGraph6MaxOrder) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds " +
                         std::to_string(kGraph6MaxOrder),
                     base);
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t expected = r.pos() + bytes;
  if (text.size() != expected) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) +
                         " bytes, got " + std::to_string(text.size()),
                     base + std::min(text.size(), expected));
  }
  GraphBuilder b(n);
  std::size_t bit = 0;
  unsigned chunk = 0;
  std::size_t chunk_pos = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) {
        chunk_pos = r.pos();
        chunk = r.value();
      }
      if ((chunk >> (5 - bit % 6)) & 1u) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0 && (chunk & ((1u << (6 - bit % 6)) - 1)) != 0) {
    throw ParseError("non-zero graph6 padding bits", base + chunk_pos);
  }
  return b.build();
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_order(out, n);
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const auto row = g.row(j);
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | static_cast<unsigned>((row[i >> 6] >> (i & 63)) & 1u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) { return decode_at(text, 0); }

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(decode_at(line, start));
    start = end + 1;
  }
  return out;
}

}  // namespace planar_turan
