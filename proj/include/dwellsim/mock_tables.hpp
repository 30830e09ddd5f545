#pragma once

// Keyword tables backing the deterministic mock standardizer. Full-match
// keywords carry a complete code; generic keywords carry a partial code
// (no low level) and mark the input as insufficient.

#include <string_view>

namespace dwellsim::data {

struct CiKeyword { std::string_view token; std::string_view hs6; };
struct CiGenericKeyword { std::string_view token; std::string_view hs2; std::string_view hs4; };
struct OiKeyword { std::string_view token; std::string_view group3; std::string_view size; };
struct OiGenericKeyword { std::string_view token; std::string_view section; std::string_view division; };

inline constexpr CiKeyword kCiKeywords[] = {
    {"JUICE", "200990"},
    {"ORANGE", "200911"},
    {"TOMATO", "200950"},
    {"APPLE", "080810"},
    {"BANANA", "080390"},
    {"LEMON", "080550"},
    {"BERRY", "081010"},
    {"COFFEE", "090111"},
    {"TEA", "090210"},
    {"PEPPER", "090411"},
    {"WHEAT", "100199"},
    {"RICE", "100630"},
    {"MAIZE", "100590"},
    {"FLOUR", "110100"},
    {"STARCH", "110812"},
    {"SOYBEAN", "150790"},
    {"OLIVE", "150910"},
    {"PALM", "151190"},
    {"SAUSAGE", "160100"},
    {"TUNA", "160414"},
    {"SUGAR", "170199"},
    {"CANDY", "170490"},
    {"COCOA", "180100"},
    {"CHOCOLATE", "180690"},
    {"PASTA", "190219"},
    {"NOODLE", "190230"},
    {"BISCUIT", "190531"},
    {"KIMCHI", "200599"},
    {"JAM", "200799"},
    {"SAUCE", "210390"},
    {"SEASONING", "210690"},
    {"BEER", "220300"},
    {"WINE", "220421"},
    {"WATER", "220110"},
    {"SODA", "220210"},
    {"FEED", "230990"},
    {"FISHMEAL", "230120"},
    {"MILK", "040120"},
    {"CHEESE", "040690"},
    {"BUTTER", "040510"},
    {"HONEY", "040900"},
    {"PORK", "020319"},
    {"BEEF", "020230"},
    {"CHICKEN", "020714"},
    {"SHRIMP", "030617"},
    {"SALMON", "030214"},
    {"MACKEREL", "030311"},
    {"POTATO", "070190"},
    {"ONION", "070310"},
    {"GARLIC", "070320"},
    {"METHANOL", "290511"},
    {"ACRYLIC", "291612"},
    {"VACCINE", "300212"},
    {"MEDICINE", "300490"},
    {"PAINT", "320890"},
    {"PIGMENT", "320417"},
    {"PERFUME", "330300"},
    {"COSMETIC", "330499"},
    {"LIPSTICK", "330410"},
    {"SHAMPOO", "330510"},
    {"TOOTHPASTE", "330610"},
    {"SOAP", "340119"},
    {"DETERGENT", "340220"},
    {"PESTICIDE", "380891"},
    {"POLYETHYLENE", "390120"},
    {"POLYPROPYLENE", "390210"},
    {"RESIN", "390769"},
    {"FILM", "392010"},
    {"BOTTLE", "392330"},
    {"TYRE", "401110"},
    {"TIRE", "401110"},
    {"PLYWOOD", "441231"},
    {"TIMBER", "440711"},
    {"PAPER", "480256"},
    {"CARTON", "481910"},
    {"COTTON", "520100"},
    {"YARN", "520511"},
    {"FABRIC", "520819"},
    {"SWEATER", "611030"},
    {"SHIRT", "620520"},
    {"TROUSERS", "620342"},
    {"DRESS", "620442"},
    {"FOOTWEAR", "640299"},
    {"SNEAKER", "640411"},
    {"GRANITE", "680223"},
    {"MARBLE", "680221"},
    {"TILE", "690722"},
    {"GLASS", "700529"},
    {"STEEL", "720838"},
    {"STAINLESS", "721931"},
    {"PIPE", "730429"},
    {"BOLT", "731815"},
    {"ALUMINIUM", "760120"},
    {"ALUMINUM", "760120"},
    {"ENGINE", "840734"},
    {"PUMP", "841370"},
    {"REFRIGERATOR", "841821"},
    {"FILTER", "842121"},
    {"WASHER", "845011"},
    {"COMPUTER", "847130"},
    {"LAPTOP", "847130"},
    {"VALVE", "848180"},
    {"BEARING", "848320"},
    {"GEARBOX", "848340"},
    {"SHAFT", "848310"},
    {"MOTOR", "850131"},
    {"TRANSFORMER", "850421"},
    {"BATTERY", "850760"},
    {"SMARTPHONE", "851712"},
    {"CABLE", "854449"},
    {"MONITOR", "852872"},
    {"VEHICLE", "870323"},
    {"TRUCK", "870421"},
    {"MOTORCYCLE", "871120"},
    {"BUMPER", "870810"},
    {"BRAKE", "870830"},
    {"AXLE", "870850"},
    {"SYRINGE", "901831"},
    {"CHAIR", "940161"},
    {"DESK", "940310"},
    {"MATTRESS", "940421"},
    {"LAMP", "940511"},
    {"TOY", "950300"},
    {"GOLF", "950631"},
};

inline constexpr CiGenericKeyword kCiGenericKeywords[] = {
    {"TUBE", "73", "7304"},
    {"STERILE", "30", "3004"},
    {"GARMENTS", "62", "6211"},
    {"PARTS", "84", "8473"},
    {"SAMPLE", "38", "3824"},
    {"EQUIPMENT", "84", "8413"},
    {"CHEMICAL", "38", "3824"},
    {"MACHINERY", "84", "8413"},
    {"TEXTILE", "52", "5208"},
    {"FOODSTUFF", "21", "2106"},
    {"MATERIAL", "39", "3926"},
    {"COMMODITY", "21", "2106"},
    {"GOODS", "21", "2106"},
    {"GENERAL", "21", "2106"},
    {"MISC", "21", "2106"},
};

inline constexpr OiKeyword kOiKeywords[] = {
    {"HANSUNG", "291", "Large"},
    {"DAEMYUNG", "107", "Mid"},
    {"SEORIM", "521", "Large"},
    {"PUKYONG", "031", "SME"},
    {"GEUMHO", "221", "Large"},
    {"ORION", "107", "Large"},
    {"SAMYANG", "106", "Large"},
    {"CHEONGWOO", "101", "Mid"},
    {"BADAMARU", "102", "SME"},
    {"NONGSAN", "011", "SME"},
    {"HANIL", "231", "Mid"},
    {"KUMSUNG", "262", "Large"},
    {"TAEYANG", "211", "Mid"},
    {"MIRAE", "212", "SME"},
    {"DAEHAN", "241", "Large"},
    {"POHANG", "241", "Large"},
    {"SEJIN", "303", "Mid"},
    {"HYOSEONG", "131", "Large"},
    {"WOOJIN", "251", "SME"},
    {"KORAM", "201", "Mid"},
    {"BOSUNG", "561", "SME"},
    {"JINMI", "561", "Mid"},
    {"NAMHAE", "551", "SME"},
    {"GEOBUK", "501", "Large"},
    {"ARIRANG", "493", "Mid"},
    {"PANKO", "529", "SME"},
    {"SINSEGYE", "471", "Large"},
    {"MYUNGDONG", "461", "Mid"},
    {"GWANGIL", "468", "SME"},
    {"YESUL", "901", "SME"},
    {"HANGANG", "381", "Mid"},
    {"SEOGWANG", "412", "Large"},
    {"TONGYEONG", "032", "SME"},
    {"DONGBU", "281", "Large"},
    {"CHILSUNG", "111", "Large"},
    {"HAENAM", "012", "SME"},
};

inline constexpr OiGenericKeyword kOiGenericKeywords[] = {
    {"TRADING", "G", "46"},
    {"INTERNATIONAL", "G", "46"},
    {"GLOBAL", "H", "52"},
    {"LOGISTICS", "H", "52"},
    {"INDUSTRY", "C", "25"},
    {"COMPANY", "G", "46"},
};

}  // namespace dwellsim::data
