#!/usr/bin/env python3
"""Regenerate src/emoji_data.cpp from the Unicode character database.

Shortnames are the Unicode names, lowercased, with a trailing " symbol"
dropped and non-alphanumeric runs collapsed to single hyphens, e.g.
U+1F4AF "HUNDRED POINTS SYMBOL" -> "hundred-points".
"""
import sys
import unicodedata

BLOCKS = [
    (0x2600, 0x26FF),    # miscellaneous symbols
    (0x2700, 0x27BF),    # dingbats
    (0x2B00, 0x2BFF),    # misc symbols and arrows (stars etc.)
    (0x1F300, 0x1F5FF),  # misc symbols and pictographs
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport and map symbols
    (0x1F900, 0x1F9FF),  # supplemental symbols and pictographs
]

# Skin tone modifiers combine with a preceding emoji; they are not words.
SKIP = set(range(0x1F3FB, 0x1F400))


def shortname(cp: int) -> str | None:
    try:
        name = unicodedata.name(chr(cp)).lower()
    except ValueError:
        return None
    if name.endswith(" symbol") and name != "symbol":
        name = name[: -len(" symbol")]
    parts = []
    word = []
    for ch in name:
        if ch.isalnum():
            word.append(ch)
        elif word:
            parts.append("".join(word))
            word = []
    if word:
        parts.append("".join(word))
    return "-".join(parts) if parts else None


def cpp_escape_utf8(cp: int) -> str:
    return "".join("\\x%02x" % b for b in chr(cp).encode("utf-8"))


def main() -> None:
    entries = []
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            if cp in SKIP:
                continue
            name = shortname(cp)
            if name is None:
                continue
            entries.append((cpp_escape_utf8(cp), name, cp))

    out = sys.stdout
    out.write("// Generated by scripts/gen_emoji_table.py; do not edit by hand.\n")
    out.write('#include "slicecheck/preprocess.hpp"\n\n')
    out.write("namespace slicecheck {\n\n")
    out.write("namespace {\n\n")
    out.write("struct EmojiEntry {\n  const char* utf8;\n  const char* name;\n};\n\n")
    out.write("const EmojiEntry kEmojiEntries[] = {\n")
    for utf8, name, cp in entries:
        out.write('    {"%s", "%s"},  // U+%04X\n' % (utf8, name, cp))
    out.write("};\n\n")
    out.write("}  // namespace\n\n")
    out.write("const std::map<std::string, std::string>& default_emoji_table() {\n")
    out.write("  static const std::map<std::string, std::string> table = [] {\n")
    out.write("    std::map<std::string, std::string> t;\n")
    out.write("    for (const EmojiEntry& e : kEmojiEntries) t.emplace(e.utf8, e.name);\n")
    out.write("    return t;\n")
    out.write("  }();\n")
    out.write("  return table;\n")
    out.write("}\n\n")
    out.write("}  // namespace slicecheck\n")


if __name__ == "__main__":
    main()
