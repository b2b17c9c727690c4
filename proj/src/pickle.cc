// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sggc/pickle.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <unordered_map>

#include "sggc/error.h"

namespace sggc::pickle {
namespace {

using Kind = Value::Kind;

[[noreturn]] void Bad(const std::string& what) {
  Fail(ErrorCode::kInvalidInput, "pickle: " + what);
}

ValuePtr Make(Kind kind) {
  auto v = std::make_shared<Value>();
  v->kind = kind;
  return v;
}

ValuePtr MakeInt(std::int64_t i) {
  auto v = Make(Kind::kInt);
  v->int_value = i;
  return v;
}

ValuePtr MakeString(Kind kind, std::string s) {
  auto v = Make(kind);
  v->text = std::move(s);
  return v;
}

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// UTF-8 text whose code points are all < 256, mapped one byte per point.
std::string Utf8ToLatin1(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::uint32_t cp;
    if (c < 0x80) {
      cp = c;
      i += 1;
    } else if ((c & 0xE0) == 0xC0 && i + 1 < text.size()) {
      cp = ((c & 0x1F) << 6) | (static_cast<unsigned char>(text[i + 1]) & 0x3F);
      i += 2;
    } else {
      Bad("latin1 encode of a code point above 255");
    }
    if (cp > 0xFF) Bad("latin1 encode of a code point above 255");
    out.push_back(static_cast<char>(cp));
  }
  return out;
}

int HexDigit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  Bad("bad hex digit in escaped string");
}

// Decodes a Python 2 string repr such as 'ab\x00\n'.
std::string UnescapeRepr(std::string_view repr) {
  while (!repr.empty() && (repr.back() == '\r' || repr.back() == ' ')) {
    repr.remove_suffix(1);
  }
  if (repr.size() < 2 || (repr.front() != '\'' && repr.front() != '"') ||
      repr.back() != repr.front()) {
    Bad("STRING argument is not a quoted repr");
  }
  repr = repr.substr(1, repr.size() - 2);
  std::string out;
  for (std::size_t i = 0; i < repr.size(); ++i) {
    char ch = repr[i];
    if (ch != '\\') {
      out.push_back(ch);
      continue;
    }
    if (++i >= repr.size()) Bad("dangling escape");
    ch = repr[i];
    switch (ch) {
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case '\\': out.push_back('\\'); break;
      case '\'': out.push_back('\''); break;
      case '"': out.push_back('"'); break;
      case 'a': out.push_back('\a'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 'v': out.push_back('\v'); break;
      case 'x': {
        if (i + 2 >= repr.size()) Bad("short \\x escape");
        out.push_back(static_cast<char>(HexDigit(repr[i + 1]) * 16 +
                                        HexDigit(repr[i + 2])));
        i += 2;
        break;
      }
      default:
        if (ch >= '0' && ch <= '7') {
          int value = 0, digits = 0;
          while (digits < 3 && i < repr.size() && repr[i] >= '0' &&
                 repr[i] <= '7') {
            value = value * 8 + (repr[i] - '0');
            ++i;
            ++digits;
          }
          --i;
          out.push_back(static_cast<char>(value));
        } else {
          out.push_back('\\');
          out.push_back(ch);
        }
    }
  }
  return out;
}

// raw-unicode-escape as used by protocol 0's UNICODE opcode.
std::string DecodeRawUnicodeEscape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == 'u' || s[i + 1] == 'U')) {
      const std::size_t width = s[i + 1] == 'u' ? 4 : 8;
      if (i + 2 + width > s.size()) Bad("short unicode escape");
      std::uint32_t cp = 0;
      for (std::size_t k = 0; k < width; ++k) cp = cp * 16 + HexDigit(s[i + 2 + k]);
      AppendUtf8(out, cp);
      i += 1 + width;
    } else {
      AppendUtf8(out, static_cast<unsigned char>(s[i]));
    }
  }
  return out;
}

class Unpickler {
 public:
  explicit Unpickler(std::string_view bytes) : in_(bytes) {}

  ValuePtr Run() {
    while (true) {
      const auto op = static_cast<unsigned char>(ReadByte());
      switch (op) {
        case 0x80: ReadByte(); break;             // PROTO
        case 0x95: ReadLE(8); break;              // FRAME
        case '.':                                 // STOP
          if (stack_.empty()) Bad("STOP on empty stack");
          return stack_.back();
        case '(': Push(Make(Kind::kMark)); break;
        case '0': Pop(); break;
        case '1': PopToMark(); break;
        case '2': Push(Top()); break;
        case 'N': Push(Make(Kind::kNone)); break;
        case 0x88: Push(MakeBool(true)); break;
        case 0x89: Push(MakeBool(false)); break;
        case 'I': PushTextInt(ReadLine()); break;
        case 'L': {
          std::string line = ReadLine();
          if (!line.empty() && line.back() == 'L') line.pop_back();
          Push(MakeInt(std::stoll(line)));
          break;
        }
        case 'J': Push(MakeInt(static_cast<std::int32_t>(ReadLE(4)))); break;
        case 'K': Push(MakeInt(static_cast<std::uint8_t>(ReadByte()))); break;
        case 'M': Push(MakeInt(static_cast<std::uint16_t>(ReadLE(2)))); break;
        case 0x8a: Push(MakeInt(ReadSignedLE(ReadLE(1)))); break;
        case 0x8b: Push(MakeInt(ReadSignedLE(ReadLE(4)))); break;
        case 'F': {
          auto v = Make(Kind::kFloat);
          v->float_value = std::stod(ReadLine());
          Push(v);
          break;
        }
        case 'G': {
          std::uint64_t bits = 0;
          for (int i = 0; i < 8; ++i) {
            bits = (bits << 8) | static_cast<unsigned char>(ReadByte());
          }
          auto v = Make(Kind::kFloat);
          std::memcpy(&v->float_value, &bits, 8);
          Push(v);
          break;
        }
        case 'S': Push(MakeString(Kind::kBytes, UnescapeRepr(ReadLine()))); break;
        case 'T': Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(4)))); break;
        case 'U': Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(1)))); break;
        case 'B': Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(4)))); break;
        case 'C': Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(1)))); break;
        case 0x8e: Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(8)))); break;
        case 0x96: Push(MakeString(Kind::kBytes, ReadBytes(ReadLE(8)))); break;
        case 'V':
          Push(MakeString(Kind::kText, DecodeRawUnicodeEscape(ReadLine())));
          break;
        case 'X': Push(MakeString(Kind::kText, ReadBytes(ReadLE(4)))); break;
        case 0x8c: Push(MakeString(Kind::kText, ReadBytes(ReadLE(1)))); break;
        case 0x8d: Push(MakeString(Kind::kText, ReadBytes(ReadLE(8)))); break;
        case ')': Push(Make(Kind::kTuple)); break;
        case 't': Push(MakeSequence(Kind::kTuple, PopToMark())); break;
        case 0x85: PushTupleOf(1); break;
        case 0x86: PushTupleOf(2); break;
        case 0x87: PushTupleOf(3); break;
        case ']': Push(Make(Kind::kList)); break;
        case 'l': Push(MakeSequence(Kind::kList, PopToMark())); break;
        case 0x8f: Push(Make(Kind::kList)); break;  // EMPTY_SET as list
        case 0x91: Push(MakeSequence(Kind::kList, PopToMark())); break;
        case 'a': {
          ValuePtr item = Pop();
          Top()->items.push_back(item);
          break;
        }
        case 'e':
        case 0x90: {
          std::vector<ValuePtr> items = PopToMark();
          auto& target = Top()->items;
          target.insert(target.end(), items.begin(), items.end());
          break;
        }
        case '}': Push(Make(Kind::kDict)); break;
        case 'd': {
          std::vector<ValuePtr> items = PopToMark();
          auto dict = Make(Kind::kDict);
          AddPairs(*dict, items);
          Push(dict);
          break;
        }
        case 's': {
          ValuePtr value = Pop();
          ValuePtr key = Pop();
          Top()->entries.emplace_back(key, value);
          break;
        }
        case 'u': {
          std::vector<ValuePtr> items = PopToMark();
          AddPairs(*Top(), items);
          break;
        }
        case 'c': {
          std::string module = ReadLine();
          std::string name = ReadLine();
          Push(MakeString(Kind::kGlobal, module + "." + name));
          break;
        }
        case 0x93: {
          ValuePtr name = Pop();
          ValuePtr module = Pop();
          Push(MakeString(Kind::kGlobal, module->text + "." + name->text));
          break;
        }
        case 'R': {
          ValuePtr args = Pop();
          ValuePtr callable = Pop();
          Push(Call(*callable, *args));
          break;
        }
        case 0x81: {  // NEWOBJ
          ValuePtr args = Pop();
          ValuePtr cls = Pop();
          Push(NewObject(*cls, *args));
          break;
        }
        case 0x92: {  // NEWOBJ_EX
          Pop();
          ValuePtr args = Pop();
          ValuePtr cls = Pop();
          Push(NewObject(*cls, *args));
          break;
        }
        case 'b': {
          ValuePtr state = Pop();
          Build(*Top(), state);
          break;
        }
        case 'p': memo_[std::stoll(ReadLine())] = Top(); break;
        case 'q': memo_[static_cast<std::uint8_t>(ReadByte())] = Top(); break;
        case 'r': memo_[ReadLE(4)] = Top(); break;
        case 0x94: {
          const auto key = static_cast<std::int64_t>(memo_.size());
          memo_[key] = Top();
          break;
        }
        case 'g': Push(Memo(std::stoll(ReadLine()))); break;
        case 'h': Push(Memo(static_cast<std::uint8_t>(ReadByte()))); break;
        case 'j': Push(Memo(ReadLE(4))); break;
        default: {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "unsupported opcode 0x%02x at %zu",
                        op, pos_ - 1);
          Bad(buf);
        }
      }
    }
  }

 private:
  char ReadByte() {
    if (pos_ >= in_.size()) Bad("unexpected end of data");
    return in_[pos_++];
  }

  std::string ReadBytes(std::uint64_t count) {
    if (count > in_.size() - pos_) Bad("string length exceeds data");
    std::string s(in_.substr(pos_, count));
    pos_ += count;
    return s;
  }

  std::uint64_t ReadLE(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ReadByte()))
           << (8 * i);
    }
    return v;
  }

  std::int64_t ReadSignedLE(std::uint64_t width) {
    if (width == 0) return 0;
    if (width > 8) Bad("integer wider than 64 bits");
    std::uint64_t v = ReadLE(static_cast<int>(width));
    if (width < 8 && (v >> (8 * width - 1)) & 1) v |= ~0ULL << (8 * width);
    return static_cast<std::int64_t>(v);
  }

  std::string ReadLine() {
    const auto end = in_.find('\n', pos_);
    if (end == std::string_view::npos) Bad("unterminated line argument");
    std::string line(in_.substr(pos_, end - pos_));
    pos_ = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  static ValuePtr MakeBool(bool b) {
    auto v = Make(Kind::kBool);
    v->int_value = b;
    return v;
  }

  void PushTextInt(const std::string& line) {
    if (line == "01") {
      Push(MakeBool(true));
    } else if (line == "00") {
      Push(MakeBool(false));
    } else {
      Push(MakeInt(std::stoll(line)));
    }
  }

  static ValuePtr MakeSequence(Kind kind, std::vector<ValuePtr> items) {
    auto v = Make(kind);
    v->items = std::move(items);
    return v;
  }

  void PushTupleOf(int count) {
    if (static_cast<int>(stack_.size()) < count) Bad("stack underflow");
    std::vector<ValuePtr> items(stack_.end() - count, stack_.end());
    stack_.resize(stack_.size() - count);
    Push(MakeSequence(Kind::kTuple, std::move(items)));
  }

  static void AddPairs(Value& dict, const std::vector<ValuePtr>& items) {
    if (items.size() % 2 != 0) Bad("odd number of dict items");
    for (std::size_t i = 0; i < items.size(); i += 2) {
      dict.entries.emplace_back(items[i], items[i + 1]);
    }
  }

  void Push(ValuePtr v) { stack_.push_back(std::move(v)); }

  ValuePtr Pop() {
    if (stack_.empty()) Bad("stack underflow");
    ValuePtr v = stack_.back();
    stack_.pop_back();
    return v;
  }

  ValuePtr Top() {
    if (stack_.empty()) Bad("stack underflow");
    return stack_.back();
  }

  std::vector<ValuePtr> PopToMark() {
    auto it = std::find_if(stack_.rbegin(), stack_.rend(), [](const ValuePtr& v) {
      return v->is(Kind::kMark);
    });
    if (it == stack_.rend()) Bad("missing MARK");
    auto mark = std::prev(it.base());
    std::vector<ValuePtr> items(mark + 1, stack_.end());
    stack_.erase(mark, stack_.end());
    return items;
  }

  ValuePtr Memo(std::int64_t key) {
    auto it = memo_.find(key);
    if (it == memo_.end()) Bad("memo key not found");
    return it->second;
  }

  static bool Named(const Value& v, std::initializer_list<const char*> names) {
    if (!v.is(Kind::kGlobal)) return false;
    for (const char* name : names) {
      if (v.text == name) return true;
    }
    return false;
  }

  static ValuePtr NewObject(const Value& cls, const Value& args) {
    if (Named(cls, {"collections.defaultdict", "collections.OrderedDict"})) {
      return Make(Kind::kDict);
    }
    if (Named(cls, {"numpy.ndarray"})) return Make(Kind::kArray);
    auto obj = Make(Kind::kObject);
    obj->text = cls.text;
    obj->items = args.items;
    return obj;
  }

  static ValuePtr Call(const Value& callable, const Value& args) {
    if (Named(callable, {"numpy.core.multiarray._reconstruct",
                         "numpy._core.multiarray._reconstruct"})) {
      return Make(Kind::kArray);
    }
    if (Named(callable, {"numpy.dtype"})) {
      if (args.items.empty() || !(args.items[0]->is(Kind::kText) ||
                                  args.items[0]->is(Kind::kBytes))) {
        Bad("dtype without a type string");
      }
      auto dtype = Make(Kind::kDtype);
      dtype->array.type_code = args.items[0]->text;
      return dtype;
    }
    if (Named(callable, {"_codecs.encode"})) {
      if (args.items.empty()) Bad("_codecs.encode without arguments");
      return MakeString(Kind::kBytes, Utf8ToLatin1(args.items[0]->text));
    }
    if (Named(callable, {"copy_reg._reconstructor", "copyreg._reconstructor"})) {
      if (args.items.empty()) Bad("_reconstructor without arguments");
      return NewObject(*args.items[0], Value{});
    }
    if (Named(callable, {"collections.defaultdict", "collections.OrderedDict",
                         "__builtin__.dict", "builtins.dict"})) {
      return Make(Kind::kDict);
    }
    if (Named(callable, {"__builtin__.set", "builtins.set", "__builtin__.frozenset",
                         "builtins.frozenset", "__builtin__.list", "builtins.list"})) {
      auto list = Make(Kind::kList);
      if (!args.items.empty()) list->items = args.items[0]->items;
      return list;
    }
    if (Named(callable, {"numpy.core.multiarray.scalar",
                         "numpy._core.multiarray.scalar"})) {
      if (args.items.size() < 2) Bad("numpy scalar needs dtype and data");
      NdArray scalar = args.items[0]->array;
      scalar.data = args.items[1]->text;
      scalar.shape = {1};
      auto arr = Make(Kind::kArray);
      arr->array = scalar;
      Eigen::MatrixXd m = ToDenseMatrix(*arr);
      const std::string& tc = scalar.type_code;
      if (!tc.empty() && tc[0] == 'f') {
        auto v = Make(Kind::kFloat);
        v->float_value = m(0, 0);
        return v;
      }
      return MakeInt(static_cast<std::int64_t>(m(0, 0)));
    }
    auto obj = Make(Kind::kObject);
    obj->text = callable.is(Kind::kGlobal) ? callable.text : "<call>";
    obj->items = args.items;
    return obj;
  }

  static void Build(Value& target, const ValuePtr& state) {
    if (target.is(Kind::kArray)) {
      // (version, shape, dtype, is_fortran, raw_bytes)
      const auto& s = state->items;
      if (s.size() < 5 || !s[2]->is(Kind::kDtype)) Bad("unexpected ndarray state");
      target.array.shape.clear();
      for (const auto& dim : s[1]->items) target.array.shape.push_back(dim->int_value);
      target.array.type_code = s[2]->array.type_code;
      target.array.byte_order = s[2]->array.byte_order;
      target.array.fortran_order = s[3]->int_value != 0;
      if (!(s[4]->is(Kind::kBytes) || s[4]->is(Kind::kText))) {
        Bad("object arrays are not supported");
      }
      target.array.data = s[4]->is(Kind::kText) ? Utf8ToLatin1(s[4]->text)
                                                : s[4]->text;
      return;
    }
    if (target.is(Kind::kDtype)) {
      // (version, byteorder, ...)
      if (state->items.size() >= 2 &&
          (state->items[1]->is(Kind::kText) || state->items[1]->is(Kind::kBytes)) &&
          !state->items[1]->text.empty()) {
        target.array.byte_order = state->items[1]->text[0];
      }
      return;
    }
    if (target.is(Kind::kDict) && state->is(Kind::kDict)) {
      target.entries.insert(target.entries.end(), state->entries.begin(),
                            state->entries.end());
      return;
    }
    // (dict, slots) or plain dict.
    if (state->is(Kind::kTuple) && !state->items.empty() &&
        state->items[0]->is(Kind::kDict)) {
      target.state = state->items[0];
    } else {
      target.state = state;
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::vector<ValuePtr> stack_;
  std::unordered_map<std::int64_t, ValuePtr> memo_;
};

double ElementAt(const NdArray& a, std::size_t index) {
  const std::string& tc = a.type_code;
  std::string code = tc;
  char order = a.byte_order;
  if (!code.empty() && (code[0] == '<' || code[0] == '>' || code[0] == '|' ||
                        code[0] == '=')) {
    order = code[0];
    code = code.substr(1);
  }
  if (code == "?") code = "b1";
  if (code.size() < 2) Bad("unsupported dtype '" + tc + "'");
  const char kind = code[0];
  const int width = std::stoi(code.substr(1));
  if (width <= 0 || width > 8) Bad("unsupported dtype '" + tc + "'");
  const std::size_t offset = index * width;
  if (offset + width > a.data.size()) Bad("array data shorter than shape");
  unsigned char raw[8];
  std::memcpy(raw, a.data.data() + offset, width);
  if (order == '>') std::reverse(raw, raw + width);
  std::uint64_t bits = 0;
  std::memcpy(&bits, raw, width);
  switch (kind) {
    case 'f':
      if (width == 4) {
        float f;
        std::memcpy(&f, raw, 4);
        return f;
      }
      if (width == 8) {
        double d;
        std::memcpy(&d, raw, 8);
        return d;
      }
      Bad("unsupported float width in '" + tc + "'");
    case 'i': {
      if (width < 8 && (bits >> (8 * width - 1)) & 1) bits |= ~0ULL << (8 * width);
      return static_cast<double>(static_cast<std::int64_t>(bits));
    }
    case 'u':
    case 'b':
      return static_cast<double>(bits);
    default:
      Bad("unsupported dtype '" + tc + "'");
  }
}

std::size_t ElementCount(const NdArray& a) {
  std::size_t count = 1;
  for (auto dim : a.shape) count *= static_cast<std::size_t>(dim);
  return count;
}

Eigen::MatrixXd ArrayToDense(const NdArray& a) {
  if (a.shape.size() > 2) Bad("arrays with more than two dimensions");
  const Eigen::Index rows = a.shape.empty() ? 1 : a.shape[0];
  const Eigen::Index cols = a.shape.size() == 2 ? a.shape[1] : 1;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const std::size_t index = a.fortran_order ? c * rows + r : r * cols + c;
      m(r, c) = ElementAt(a, index);
    }
  }
  return m;
}

}  // namespace

ValuePtr Load(std::string_view bytes) { return Unpickler(bytes).Run(); }

ValuePtr LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  try {
    return Load(bytes);
  } catch (const Error& e) {
    Fail(e.code(), path + ": " + e.what());
  }
}

ValuePtr Attribute(const Value& object, std::string_view name) {
  const ValuePtr& dict = object.state;
  if (!dict || !dict->is(Kind::kDict)) return nullptr;
  for (const auto& [key, value] : dict->entries) {
    if ((key->is(Kind::kText) || key->is(Kind::kBytes)) && key->text == name) {
      return value;
    }
  }
  return nullptr;
}

Eigen::MatrixXd ToDenseMatrix(const Value& value) {
  if (value.is(Kind::kArray)) return ArrayToDense(value.array);
  if (!value.is(Kind::kObject)) Bad("value is neither an array nor a matrix");
  const bool csr = value.text.find("csr_") != std::string::npos;
  const bool csc = value.text.find("csc_") != std::string::npos;
  if (!csr && !csc) Bad("unsupported matrix class " + value.text);
  ValuePtr shape = Attribute(value, "_shape");
  if (!shape) shape = Attribute(value, "shape");
  ValuePtr indices = Attribute(value, "indices");
  ValuePtr indptr = Attribute(value, "indptr");
  ValuePtr data = Attribute(value, "data");
  if (!shape || !indices || !indptr || !data || shape->items.size() != 2) {
    Bad("sparse matrix state is missing fields");
  }
  const Eigen::Index rows = shape->items[0]->int_value;
  const Eigen::Index cols = shape->items[1]->int_value;
  const std::vector<std::int64_t> idx = ToIntVector(*indices);
  const std::vector<std::int64_t> ptr = ToIntVector(*indptr);
  const Eigen::MatrixXd vals = ToDenseMatrix(*data);
  const Eigen::Index outer = csr ? rows : cols;
  if (static_cast<Eigen::Index>(ptr.size()) != outer + 1) Bad("bad indptr length");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (auto k = ptr[o]; k < ptr[o + 1]; ++k) {
      if (k < 0 || k >= static_cast<std::int64_t>(idx.size())) Bad("bad indptr");
      const auto inner = idx[k];
      if (inner < 0 || inner >= (csr ? cols : rows)) Bad("index out of range");
      (csr ? m(o, inner) : m(inner, o)) += vals(k, 0);
    }
  }
  return m;
}

std::vector<std::int64_t> ToIntVector(const Value& value) {
  std::vector<std::int64_t> out;
  if (value.is(Kind::kArray)) {
    const std::size_t count = ElementCount(value.array);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(static_cast<std::int64_t>(ElementAt(value.array, i)));
    }
    return out;
  }
  if (value.is(Kind::kList) || value.is(Kind::kTuple)) {
    for (const auto& item : value.items) {
      if (!item->is(Kind::kInt) && !item->is(Kind::kBool)) Bad("non-integer item");
      out.push_back(item->int_value);
    }
    return out;
  }
  Bad("value is not an integer sequence");
}

std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> ToAdjacencyLists(
    const Value& value) {
  if (!value.is(Kind::kDict)) Bad("graph is not a dict");
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> out;
  out.reserve(value.entries.size());
  for (const auto& [key, nbrs] : value.entries) {
    if (!key->is(Kind::kInt)) Bad("graph key is not an integer");
    out.emplace_back(key->int_value, ToIntVector(*nbrs));
  }
  return out;
}

}  // namespace sggc::pickle
