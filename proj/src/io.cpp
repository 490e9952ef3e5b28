#include "cactus/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "cactus/error.hpp"

namespace cactus {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = atEnd() ? "end of input" : std::string("'") + peek() + "'";
    throw SyntaxError(message + ", found " + found, line_, column_);
  }

  std::string digits() {
    std::string out;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(advance());
    return out;
  }

  long long integer() {
    const int line = line_;
    const int column = column_;
    const std::string d = digits();
    if (d.empty()) fail("expected an integer");
    try {
      return std::stoll(d);
    } catch (const std::out_of_range&) {
      throw SyntaxError("integer " + d + " is too large", line, column);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

Surjection compactSurjection(const std::string& d, Cursor& cursor) {
  std::vector<int> seq;
  for (char c : d) {
    if (c == '0') cursor.fail("compact form only allows digits 1-9");
    seq.push_back(c - '0');
  }
  return Surjection::validate(seq);
}

Surjection parenSurjection(Cursor& cursor) {
  cursor.expect('(');
  std::vector<int> seq;
  for (;;) {
    cursor.skipSpace();
    const long long v = cursor.integer();
    if (v > 1'000'000) cursor.fail("value too large");
    seq.push_back(static_cast<int>(v));
    cursor.skipSpace();
    if (cursor.peek() == ',') {
      cursor.advance();
      continue;
    }
    cursor.expect(')');
    break;
  }
  return Surjection::validate(seq);
}

Surjection surjectionAt(Cursor& cursor) {
  if (cursor.peek() == '(') return parenSurjection(cursor);
  const std::string d = cursor.digits();
  if (d.empty()) cursor.fail("expected a surjection");
  return compactSurjection(d, cursor);
}

std::string formatNumber(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buffer;
}

// ---- rendering ------------------------------------------------------------

void renderText(const LobeNode& node, int depth, std::size_t after, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "lobe " << node.label
     << " arcs";
  for (auto a : node.arcs) os << ' ' << a;
  if (after != 0) os << " (after arc " << after << ")";
  os << '\n';
  for (std::size_t g = 0; g < node.attachments.size(); ++g) {
    for (const auto& child : node.attachments[g]) {
      renderText(child, depth + 1, node.arcs[g], os);
    }
  }
}

void dotNodes(const LobeNode& node, bool root, std::ostringstream& os) {
  os << "  l" << node.label << " [label=\"" << node.label << "\"" << (root ? ", penwidth=2" : "")
     << "];\n";
  for (const auto& gap : node.attachments) {
    for (const auto& child : gap) dotNodes(child, false, os);
  }
}

// Depth-first, so edges appear in boundary-traversal order.
void dotEdges(const LobeNode& node, std::ostringstream& os) {
  for (std::size_t g = 0; g < node.attachments.size(); ++g) {
    for (const auto& child : node.attachments[g]) {
      os << "  l" << node.label << " -> l" << child.label << " [label=\"" << node.arcs[g]
         << "\"];\n";
      dotEdges(child, os);
    }
  }
}

struct PlacedCircle {
  int label;
  double x;
  double y;
  double r;
};

// `base` is the angle, seen from the centre, of the point where this lobe
// touches its parent (or the root point). Arcs run anticlockwise from there.
void placeLobe(const LobeNode& node, double cx, double cy, double r, double base, double ratio,
               std::vector<PlacedCircle>& out) {
  out.push_back({node.label, cx, cy, r});
  const double arcs = static_cast<double>(node.arcs.size());
  for (std::size_t g = 0; g < node.attachments.size(); ++g) {
    const double phi = base + 2.0 * std::numbers::pi * static_cast<double>(g + 1) / arcs;
    const double px = cx + r * std::cos(phi);
    const double py = cy + r * std::sin(phi);
    const auto& kids = node.attachments[g];
    const double childR = r * ratio;
    for (std::size_t s = 0; s < kids.size(); ++s) {
      const double offset =
          (static_cast<double>(s) - static_cast<double>(kids.size() - 1) / 2.0) * 0.7;
      const double dir = phi + offset;
      placeLobe(kids[s], px + childR * std::cos(dir), py + childR * std::sin(dir), childR,
                dir + std::numbers::pi, ratio, out);
    }
  }
}

std::string renderSvg(const LobeTree& tree, const RenderSpec& spec) {
  std::vector<PlacedCircle> circles;
  const double count = static_cast<double>(tree.roots.size());
  for (std::size_t k = 0; k < tree.roots.size(); ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k + 1) / (count + 1.0);
    placeLobe(tree.roots[k], spec.rootRadius * std::cos(theta), spec.rootRadius * std::sin(theta),
              spec.rootRadius, theta + std::numbers::pi, spec.childRatio, circles);
  }
  double minX = 0, maxX = 0, minY = 0, maxY = 0;
  for (const auto& c : circles) {
    minX = std::min(minX, c.x - c.r);
    maxX = std::max(maxX, c.x + c.r);
    minY = std::min(minY, c.y - c.r);
    maxY = std::max(maxY, c.y + c.r);
  }
  const double margin = 10.0 + spec.strokeWidth;
  minX -= margin;
  minY -= margin;
  maxX += margin;
  maxY += margin;
  // SVG's y axis points down; flip so the cactus grows upwards from the root.
  const auto sx = [](double x) { return formatNumber(x); };
  const auto sy = [](double y) { return formatNumber(-y); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << sx(minX) << ' '
     << sy(maxY) << ' ' << formatNumber(maxX - minX) << ' ' << formatNumber(maxY - minY)
     << "\" width=\"" << formatNumber(maxX - minX) << "\" height=\"" << formatNumber(maxY - minY)
     << "\">\n";
  for (const auto& c : circles) {
    os << "  <circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"" << formatNumber(c.r)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << formatNumber(spec.strokeWidth)
       << "\"/>\n";
    os << "  <text x=\"" << sx(c.x) << "\" y=\"" << sy(c.y)
       << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\""
       << formatNumber(std::max(6.0, c.r * 0.6)) << "\">" << c.label << "</text>\n";
  }
  const double mark = 2.0 + spec.strokeWidth;
  os << "  <rect x=\"" << formatNumber(-mark) << "\" y=\"" << formatNumber(-mark) << "\" width=\""
     << formatNumber(2 * mark) << "\" height=\"" << formatNumber(2 * mark)
     << "\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

Surjection parseSurjection(std::string_view text) {
  Cursor cursor(text);
  cursor.skipSpace();
  Surjection u = surjectionAt(cursor);
  cursor.skipSpace();
  if (!cursor.atEnd()) cursor.fail("trailing input after surjection");
  return u;
}

Element parseElement(std::string_view text) {
  Cursor cursor(text);
  cursor.skipSpace();
  if (cursor.peek() == '0') {
    cursor.advance();
    cursor.skipSpace();
    if (!cursor.atEnd()) cursor.fail("trailing input after zero element");
    return {};
  }
  Element out;
  if (cursor.atEnd()) cursor.fail("expected a term");
  while (!cursor.atEnd()) {
    Coefficient sign = 1;
    if (cursor.peek() == '+' || cursor.peek() == '-') {
      sign = cursor.advance() == '-' ? -1 : 1;
      cursor.skipSpace();
    }
    Coefficient coeff = 1;
    Surjection u = Surjection::unit();
    if (std::isdigit(static_cast<unsigned char>(cursor.peek()))) {
      Cursor lookahead = cursor;
      const long long value = cursor.integer();
      cursor.skipSpace();
      if (cursor.peek() == '*') {
        cursor.advance();
        cursor.skipSpace();
        coeff = value;
        u = surjectionAt(cursor);
      } else {
        cursor = lookahead;
        u = compactSurjection(cursor.digits(), cursor);
      }
    } else if (cursor.peek() == '(') {
      u = parenSurjection(cursor);
    } else {
      cursor.fail("expected a term");
    }
    out.addTerm(u, checkedMul(sign, coeff));
    cursor.skipSpace();
  }
  return out;
}

std::string serializeElement(const Element& a) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (bool positive : {true, false}) {
    for (const auto& [u, c] : a.terms()) {
      if ((c > 0) != positive) continue;
      if (!first) os << ' ';
      first = false;
      os << (c > 0 ? '+' : '-');
      if (c != 1 && c != -1) {
        // magnitude of INT64_MIN is not representable; print via unsigned
        const auto magnitude = c > 0 ? static_cast<unsigned long long>(c)
                                     : 0ULL - static_cast<unsigned long long>(c);
        os << magnitude << '*';
      }
      os << u.toString();
    }
  }
  return os.str();
}

nlohmann::json elementToJson(const Element& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [u, c] : a.terms()) terms.push_back({{"coeff", c}, {"seq", u.values()}});
  return {{"format", kFormatTag}, {"terms", terms}};
}

Element elementFromJson(const nlohmann::json& j) {
  try {
    if (j.contains("format") && j.at("format").get<std::string>() != kFormatTag) {
      throw Error(ErrorKind::SyntaxError, "unsupported format " + j.at("format").dump());
    }
    Element out;
    for (const auto& term : j.at("terms")) {
      const auto seq = term.at("seq").get<std::vector<int>>();
      out.addTerm(Surjection::validate(seq), term.at("coeff").get<Coefficient>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed element JSON: ") + e.what());
  }
}

nlohmann::json reportToJson(const VerificationReport& report) {
  nlohmann::json j{{"check", report.check}, {"pass", report.pass}};
  j["witness"] = report.witness ? nlohmann::json(serializeElement(*report.witness)) : nullptr;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

void RenderSpec::validate() const {
  if (!(childRatio > 0.0 && childRatio < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "child radius ratio must lie in (0,1)");
  }
  if (!(rootRadius > 0.0) || !(strokeWidth > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "radius and stroke width must be positive");
  }
}

RenderFormat parseRenderFormat(std::string_view name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "svg") return RenderFormat::Svg;
  if (name == "text") return RenderFormat::Text;
  throw Error(ErrorKind::InvalidArgument, "unknown render format '" + std::string(name) + "'");
}

std::string renderLobeTree(const LobeTree& tree, const RenderSpec& spec) {
  spec.validate();
  std::ostringstream os;
  switch (spec.format) {
    case RenderFormat::Text:
      for (const auto& r : tree.roots) renderText(r, 0, 0, os);
      return os.str();
    case RenderFormat::Dot:
      os << "digraph cactus {\n  node [shape=circle];\n";
      for (const auto& r : tree.roots) dotNodes(r, true, os);
      for (const auto& r : tree.roots) dotEdges(r, os);
      os << "}\n";
      return os.str();
    case RenderFormat::Svg:
      return renderSvg(tree, spec);
  }
  return {};
}

}  // namespace cactus
