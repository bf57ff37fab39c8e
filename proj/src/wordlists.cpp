#include <array>

#include "cmix/datagen.hpp"

namespace cmix {

namespace {

// Common Hindi words transliterated to Latin script; distinct from the
// default gender markers.
constexpr std::array<std::string_view, 210> kHindiWords = {
    "hai",      "nahi",     "kya",      "aur",      "yeh",      "woh",      "kuch",
    "bhi",      "tum",      "mera",     "meri",     "apna",     "apni",     "sabka",
    "log",      "desh",     "samay",    "aaj",      "kal",      "baat",     "din",
    "raat",     "ghar",     "kaam",     "paani",    "khana",    "accha",    "bura",
    "bada",     "chota",    "naya",     "purana",   "pyaar",    "dil",      "dost",
    "zindagi",  "duniya",   "sapna",    "raasta",   "safar",    "manzil",   "khushi",
    "gham",     "aansu",    "hansi",    "haar",     "umeed",    "bharosa",  "sach",
    "jhooth",   "sawaal",   "jawaab",   "kahani",   "kitaab",   "shabd",    "matlab",
    "soch",     "yaad",     "bhool",    "maafi",    "shukriya", "namaste",  "chai",
    "doodh",    "roti",     "sabzi",    "daal",     "chawal",   "mithai",   "bazaar",
    "dukaan",   "paisa",    "rupaya",   "gaana",    "naach",    "khel",     "padhai",
    "chalna",   "bolna",    "sunna",    "dekhna",   "milna",    "jaana",    "aana",
    "peena",    "sona",     "uthna",    "baithna",  "hansna",   "rona",     "daudna",
    "seekhna",  "samajhna", "poochna",  "batana",   "dikhana",  "mausam",   "baarish",
    "dhoop",    "hawa",     "badal",    "suraj",    "chand",    "sitara",   "aasmaan",
    "zameen",   "mitti",    "ped",      "phool",    "patta",    "nadi",     "pahad",
    "samundar", "sheher",   "gaon",     "sadak",    "gali",     "mohalla",  "mandir",
    "masjid",   "gurudwara","mela",     "tyohaar",  "shaadi",   "parivaar", "maa",
    "pita",     "beta",     "beti",     "bhabhi",   "chacha",   "mausi",    "nana",
    "nani",     "dada",     "dadi",     "bachcha",  "budha",    "jawaan",   "aadmi",
    "aurat",    "ladka",    "ladki",    "insaan",   "bhagwan",  "dua",      "pooja",
    "vrat",     "aarti",    "prasad",   "kismat",   "mehnat",   "kamyabi",  "izzat",
    "sharam",   "gussa",    "darr",     "himmat",   "taqat",    "kamzori",  "sehat",
    "bimari",   "dawai",    "ilaaj",    "aaram",    "neend",    "subah",    "shaam",
    "dopahar",  "hafta",    "mahina",   "saal",     "ghanta",   "minat",    "pal",
    "lamha",    "mauka",    "waqt",     "intezaar", "mulaqat",  "juda",     "wafa",
    "dhokha",   "yaari",    "rishta",   "bandhan",  "vaada",    "kasam",    "farz",
    "haq",      "niyam",    "kanoon",   "sarkar",   "neta",     "chunav",   "janta",
    "awaaz",    "morcha",   "jhanda",   "inqalab",  "azadi",    "gulami",   "ekta",
    "bhasha",   "boli",     "geet",     "sangeet",  "kavita",   "shayari",  "kalam",
};

// Common English words; distinct from the default gender markers.
constexpr std::array<std::string_view, 210> kEnglishWords = {
    "the",      "and",      "for",      "you",      "with",     "this",     "that",
    "have",     "from",     "they",     "will",     "what",     "when",     "where",
    "which",    "their",    "about",    "would",    "there",    "people",   "think",
    "because",  "good",     "great",    "time",     "year",     "today",    "work",
    "life",     "world",    "country",  "issue",    "vote",     "party",    "news",
    "media",    "right",    "wrong",    "true",     "false",    "support",  "against",
    "change",   "power",    "leader",   "nation",   "state",    "city",     "water",
    "money",    "school",   "student",  "teacher",  "family",   "friend",   "love",
    "hope",     "dream",    "team",     "game",     "winner",   "loser",    "play",
    "start",    "stop",     "begin",    "open",     "close",    "high",     "low",
    "big",      "small",    "new",      "old",      "young",    "first",    "last",
    "next",     "best",     "worst",    "more",     "less",     "many",     "much",
    "some",     "every",    "other",    "same",     "different","public",   "private",
    "local",    "national", "social",   "economic", "political","history",  "future",
    "present",  "question", "answer",   "problem",  "solution", "reason",   "result",
    "report",   "story",    "truth",    "fact",     "opinion",  "debate",   "speech",
    "silence",  "action",   "reaction", "movement", "protest",  "strike",   "law",
    "court",    "justice",  "police",   "army",     "border",   "peace",    "war",
    "attack",   "defence",  "victory",  "defeat",   "honour",   "respect",  "shame",
    "pride",    "anger",    "fear",     "courage",  "strength", "weakness", "health",
    "illness",  "medicine", "doctor",   "hospital", "rest",     "sleep",    "morning",
    "evening",  "afternoon","week",     "month",    "hour",     "minute",   "moment",
    "chance",   "wait",     "meeting",  "together", "apart",    "promise",  "duty",
    "tax",      "price",    "market",   "business", "company",  "job",      "salary",
    "farmer",   "village",  "road",     "train",    "station",  "ticket",   "journey",
    "travel",   "return",   "arrive",   "leave",    "stay",     "build",    "break",
    "grow",     "learn",    "teach",    "read",     "write",    "speak",    "listen",
    "watch",    "follow",   "lead",     "help",     "share",    "give",     "take",
    "keep",     "lose",     "find",     "search",   "believe",  "trust",    "doubt",
    "remember", "forget",   "forgive",  "celebrate","festival", "culture",  "language",
};

}  // namespace

std::span<const std::string_view> builtin_hindi_words() { return kHindiWords; }
std::span<const std::string_view> builtin_english_words() { return kEnglishWords; }

}  // namespace cmix
