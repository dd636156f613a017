#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace fashmine {
namespace wordlists {

// ~150 English stopwords. Overridable by file at the pipeline level.
inline constexpr std::string_view kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "aren't", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can",
    "can't", "cannot", "could", "did", "do", "does", "doing", "don't",
    "down", "during", "each", "few", "for", "from", "further", "had", "has",
    "have", "having", "he", "her", "here", "hers", "herself", "him",
    "himself", "his", "how", "i", "if", "in", "into", "is", "isn't", "it",
    "its", "itself", "just", "like", "me", "more", "most", "my", "myself",
    "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or",
    "other", "ought", "our", "ours", "ourselves", "out", "over", "own",
    "same", "she", "should", "so", "some", "such", "than", "that", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these",
    "they", "this", "those", "through", "to", "too", "under", "until", "up",
    "very", "was", "wasn't", "we", "were", "weren't", "what", "when",
    "where", "which", "while", "who", "whom", "why", "will", "with",
    "won't", "would", "you", "your", "yours", "yourself", "yourselves",
    "ain't", "also", "via", "rt", "pls", "plz", "u", "ur", "im", "dont",
    "cant", "got", "get", "one", "two", "really",
};

// Irregular lemma exceptions. Includes pluralia tantum from the clothing
// domain that must stay intact for ontology matching ("jeans" is a term,
// "jean" is not).
inline constexpr std::pair<std::string_view, std::string_view>
    kLemmaExceptions[] = {
        // domain pluralia tantum / protected forms
        {"jeans", "jeans"}, {"shorts", "shorts"}, {"tights", "tights"},
        {"trousers", "trousers"}, {"pants", "pants"}, {"leggings", "leggings"},
        {"clothes", "clothes"}, {"sunglasses", "sunglasses"},
        {"glasses", "glasses"}, {"pajamas", "pajamas"},
        {"pyjamas", "pyjamas"}, {"overalls", "overalls"},
        {"dungarees", "dungarees"}, {"culottes", "culottes"},
        {"briefs", "briefs"}, {"jeggings", "jeggings"},
        {"shoes", "shoe"}, {"scarves", "scarf"}, {"loafers", "loafer"},
        {"heels", "heel"}, {"flats", "flat"}, {"sneakers", "sneaker"},
        {"booties", "bootie"}, {"clothing", "clothing"},
        {"accessories", "accessory"}, {"dresses", "dress"},
        {"blouses", "blouse"}, {"earrings", "earring"},
        // irregular nouns
        {"feet", "foot"}, {"teeth", "tooth"}, {"geese", "goose"},
        {"men", "man"}, {"women", "woman"}, {"children", "child"},
        {"mice", "mouse"}, {"people", "people"}, {"oxen", "ox"},
        {"wives", "wife"}, {"lives", "life"}, {"knives", "knife"},
        {"leaves", "leaf"}, {"loaves", "loaf"}, {"halves", "half"},
        {"selves", "self"}, {"shelves", "shelf"}, {"thieves", "thief"},
        {"wolves", "wolf"}, {"calves", "calf"}, {"elves", "elf"},
        {"series", "series"}, {"species", "species"}, {"news", "news"},
        {"analyses", "analysis"}, {"bases", "basis"}, {"crises", "crisis"},
        {"data", "data"}, {"media", "media"}, {"criteria", "criterion"},
        {"phenomena", "phenomenon"}, {"indices", "index"},
        {"matrices", "matrix"}, {"appendices", "appendix"},
        {"sheep", "sheep"}, {"fish", "fish"}, {"deer", "deer"},
        {"moose", "moose"}, {"aircraft", "aircraft"},
        // irregular verbs (past / participle -> base)
        {"was", "be"}, {"were", "be"}, {"been", "be"}, {"is", "be"},
        {"are", "be"}, {"am", "be"}, {"went", "go"}, {"gone", "go"},
        {"goes", "go"}, {"did", "do"}, {"done", "do"}, {"had", "have"},
        {"has", "have"}, {"said", "say"}, {"made", "make"},
        {"took", "take"}, {"taken", "take"}, {"came", "come"},
        {"saw", "see"}, {"seen", "see"}, {"knew", "know"},
        {"known", "know"}, {"gave", "give"}, {"given", "give"},
        {"found", "find"}, {"thought", "think"}, {"told", "tell"},
        {"became", "become"}, {"showed", "show"}, {"shown", "show"},
        {"left", "leave"}, {"put", "put"}, {"brought", "bring"},
        {"began", "begin"}, {"begun", "begin"}, {"kept", "keep"},
        {"held", "hold"}, {"wrote", "write"}, {"written", "write"},
        {"stood", "stand"}, {"heard", "hear"}, {"let", "let"},
        {"meant", "mean"}, {"set", "set"}, {"met", "meet"},
        {"ran", "run"}, {"paid", "pay"}, {"sat", "sit"}, {"spoke", "speak"},
        {"spoken", "speak"}, {"lay", "lie"}, {"led", "lead"},
        {"read", "read"}, {"grew", "grow"}, {"grown", "grow"},
        {"lost", "lose"}, {"fell", "fall"}, {"fallen", "fall"},
        {"sent", "send"}, {"built", "build"}, {"understood", "understand"},
        {"drew", "draw"}, {"drawn", "draw"}, {"broke", "break"},
        {"broken", "break"}, {"spent", "spend"}, {"cut", "cut"},
        {"rose", "rise"}, {"risen", "rise"}, {"drove", "drive"},
        {"driven", "drive"}, {"bought", "buy"}, {"wore", "wear"},
        {"worn", "wear"}, {"chose", "choose"}, {"chosen", "choose"},
        {"ate", "eat"}, {"eaten", "eat"}, {"flew", "fly"}, {"flown", "fly"},
        {"forgot", "forget"}, {"forgotten", "forget"}, {"gotten", "get"},
        {"hung", "hang"}, {"hidden", "hide"}, {"hid", "hide"},
        {"sold", "sell"}, {"slept", "sleep"}, {"spun", "spin"},
        {"stole", "steal"}, {"stolen", "steal"}, {"swam", "swim"},
        {"swum", "swim"}, {"threw", "throw"}, {"thrown", "throw"},
        {"woke", "wake"}, {"woken", "wake"}, {"won", "win"},
        {"sewn", "sew"}, {"sewed", "sew"}, {"knit", "knit"},
        {"woven", "weave"}, {"wove", "weave"}, {"fit", "fit"},
        // pronoun/aux contractions that survive tokenization
        {"its", "its"}, {"his", "his"}, {"hers", "hers"}, {"ours", "ours"},
        {"yours", "yours"}, {"theirs", "theirs"}, {"this", "this"},
        {"itself", "itself"}, {"always", "always"}, {"perhaps", "perhaps"},
        {"during", "during"}, {"besides", "besides"}, {"less", "less"},
        {"unless", "unless"}, {"evening", "evening"}, {"morning", "morning"},
        {"something", "something"}, {"nothing", "nothing"},
        {"anything", "anything"}, {"everything", "everything"},
        {"spring", "spring"}, {"string", "string"}, {"darling", "darling"},
        {"legging", "legging"}, {"lining", "lining"}, {"ceiling", "ceiling"},
        {"feeling", "feeling"}, {"wedding", "wedding"},
        {"stunning", "stunning"}, {"gorgeous", "gorgeous"},
        {"fabulous", "fabulous"}, {"previous", "previous"},
        {"obvious", "obvious"}, {"famous", "famous"}, {"furious", "furious"},
        {"curious", "curious"}, {"serious", "serious"}, {"vicious", "vicious"},
        {"gucci", "gucci"}, {"fitted", "fit"}, {"striped", "stripe"},
        {"dotted", "dot"}, {"quizzes", "quiz"}, {"heroes", "hero"},
        {"potatoes", "potato"}, {"tomatoes", "tomato"}, {"echoes", "echo"},
};

// Unigram counts for the hashtag segmenter and the lemmatizer's dictionary
// check. Counts are order-of-magnitude web frequencies; the segmenter only
// needs relative mass. Fashion vocabulary is boosted so domain hashtags
// split well.
inline constexpr std::pair<std::string_view, long long> kUnigramCounts[] = {
    {"the", 23135851162LL}, {"of", 13151942776LL}, {"and", 12997637966LL},
    {"to", 12136980858LL}, {"a", 9081174698LL}, {"in", 8469404971LL},
    {"for", 5933321709LL}, {"is", 4705743816LL}, {"on", 3750423199LL},
    {"that", 3400031103LL}, {"by", 3350048871LL}, {"this", 3228469771LL},
    {"with", 3183110675LL}, {"i", 3086225277LL}, {"you", 2996181025LL},
    {"it", 2813163874LL}, {"not", 2633487141LL}, {"or", 2590739907LL},
    {"be", 2398724162LL}, {"are", 2393614870LL}, {"from", 2275595356LL},
    {"at", 2272272772LL}, {"as", 2247431740LL}, {"your", 1986369172LL},
    {"all", 1726495533LL}, {"have", 1563838869LL}, {"new", 1551258643LL},
    {"more", 1544771673LL}, {"an", 1518266684LL}, {"was", 1483428678LL},
    {"we", 1390661912LL}, {"will", 1356293641LL}, {"home", 1276852170LL},
    {"can", 1242323499LL}, {"us", 1229112622LL}, {"about", 1226734006LL},
    {"if", 1134987907LL}, {"page", 1082121730LL}, {"my", 1059793441LL},
    {"has", 1046319984LL}, {"search", 1024093118LL}, {"free", 1014107316LL},
    {"but", 999899654LL}, {"our", 998757982LL}, {"one", 993536631LL},
    {"other", 978481319LL}, {"do", 950751722LL}, {"no", 937112320LL},
    {"information", 932594387LL}, {"time", 908705570LL},
    {"they", 883223816LL}, {"site", 844310242LL}, {"he", 842847219LL},
    {"up", 829969374LL}, {"may", 827822032LL}, {"what", 812395582LL},
    {"which", 810514085LL}, {"their", 782849411LL}, {"news", 755424983LL},
    {"out", 741601852LL}, {"use", 719980257LL}, {"any", 710741293LL},
    {"there", 701170205LL}, {"see", 681410380LL}, {"only", 661844114LL},
    {"so", 661809559LL}, {"his", 660177731LL}, {"when", 650621178LL},
    {"here", 639711198LL}, {"who", 627189962LL}, {"web", 619107431LL},
    {"also", 617450089LL}, {"now", 611387736LL}, {"help", 611054034LL},
    {"get", 605984508LL}, {"pm", 604577485LL}, {"view", 602279334LL},
    {"online", 601317059LL}, {"first", 578161543LL}, {"am", 576436203LL},
    {"been", 575019382LL}, {"would", 572644147LL}, {"how", 571848080LL},
    {"were", 570699558LL}, {"me", 566617666LL}, {"some", 566321972LL},
    {"these", 541003982LL}, {"its", 525627757LL},
    {"like", 520585287LL}, {"service", 519537222LL}, {"than", 502609275LL},
    {"find", 496601845LL}, {"price", 501651226LL}, {"date", 488967374LL},
    {"back", 488024109LL}, {"top", 484213771LL}, {"people", 480303376LL},
    {"had", 480232730LL}, {"list", 472590641LL}, {"name", 464532702LL},
    {"just", 462836169LL}, {"over", 459222855LL}, {"state", 453104133LL},
    {"year", 451092583LL}, {"day", 446236148LL}, {"into", 445315294LL},
    {"email", 443949646LL}, {"two", 441398439LL}, {"health", 440416431LL},
    {"world", 431934249LL}, {"re", 430847564LL}, {"next", 425903347LL},
    {"used", 421438139LL}, {"go", 421086358LL}, {"work", 419483948LL},
    {"last", 417601616LL}, {"most", 416210411LL}, {"products", 414377632LL},
    {"music", 414028837LL}, {"buy", 410780176LL}, {"data", 406908328LL},
    {"make", 405084642LL}, {"them", 403000411LL}, {"should", 402028056LL},
    {"product", 399116355LL}, {"system", 396975018LL},
    {"post", 392956436LL}, {"her", 391961061LL}, {"city", 390564835LL},
    {"add", 387231739LL}, {"policy", 384401868LL}, {"number", 383787805LL},
    {"such", 380725892LL}, {"please", 380046348LL}, {"available", 379644437LL},
    {"copyright", 373906735LL}, {"support", 373512569LL},
    {"message", 373081242LL}, {"after", 372948094LL},
    {"best", 371852748LL}, {"software", 370517038LL},
    {"then", 369928941LL}, {"jan", 366436194LL}, {"good", 365796396LL},
    {"video", 365410017LL}, {"well", 362082755LL}, {"where", 360468339LL},
    {"info", 352363058LL}, {"rights", 352051342LL}, {"public", 349286123LL},
    {"books", 347710184LL}, {"high", 345413157LL}, {"school", 343057316LL},
    {"through", 342373303LL}, {"each", 340892856LL}, {"links", 339926541LL},
    {"she", 339171382LL}, {"review", 339067778LL}, {"years", 337841309LL},
    {"order", 336631187LL}, {"very", 334923368LL}, {"privacy", 333272427LL},
    {"book", 330959949LL}, {"items", 330505325LL}, {"company", 324272258LL},
    {"read", 322331766LL}, {"group", 321842984LL}, {"sex", 320105999LL},
    {"need", 319376932LL}, {"many", 318966441LL}, {"user", 316446229LL},
    {"said", 315595259LL}, {"de", 314593284LL}, {"does", 314018806LL},
    {"under", 313247919LL}, {"general", 311757793LL}, {"research", 311538382LL},
    {"university", 311373936LL}, {"january", 310345867LL},
    {"mail", 310337185LL}, {"full", 309929179LL}, {"map", 309676581LL},
    {"reviews", 307684103LL}, {"program", 306686983LL},
    {"life", 306559205LL}, {"know", 306100813LL}, {"games", 305930896LL},
    {"way", 305515604LL}, {"days", 305147791LL}, {"management", 304196403LL},
    {"part", 302729303LL}, {"could", 302311431LL},
    {"great", 301487430LL}, {"united", 299280163LL},
    {"hotel", 297974790LL}, {"real", 297674493LL}, {"item", 296534935LL},
    {"international", 295639201LL}, {"center", 294656707LL},
    {"ebay", 293814162LL}, {"must", 293453355LL}, {"store", 293283690LL},
    {"travel", 292212559LL}, {"comments", 291971064LL},
    {"made", 291705549LL}, {"development", 289121539LL},
    {"report", 288401852LL}, {"off", 287819287LL}, {"member", 286981077LL},
    {"details", 286463836LL}, {"line", 286363282LL},
    {"terms", 285962189LL}, {"before", 285701544LL}, {"hotels", 285315436LL},
    {"did", 284478617LL}, {"send", 284037220LL}, {"right", 283808724LL},
    {"type", 283538422LL}, {"because", 283429647LL},
    {"local", 283165906LL}, {"those", 283005577LL}, {"using", 282755376LL},
    {"results", 282456710LL}, {"office", 282186325LL},
    {"education", 281944710LL}, {"national", 281333977LL},
    {"car", 281194679LL}, {"design", 280631770LL},
    {"take", 280293866LL}, {"posted", 280010538LL},
    {"internet", 279425350LL}, {"address", 278857538LL},
    {"community", 277844350LL}, {"within", 277582338LL},
    {"states", 277285574LL}, {"area", 276547790LL},
    {"want", 276181533LL}, {"phone", 275456934LL},
    {"shipping", 275044812LL}, {"reserved", 274853385LL},
    {"subject", 274437219LL}, {"between", 274239853LL},
    {"forum", 273869755LL}, {"family", 272633743LL},
    {"long", 272090264LL}, {"based", 271743311LL},
    {"code", 271354364LL}, {"show", 270064421LL}, {"even", 269002546LL},
    {"black", 268549411LL}, {"check", 268241085LL},
    {"special", 267933779LL}, {"prices", 267653177LL},
    {"website", 267377752LL}, {"index", 266426264LL},
    {"being", 266372416LL}, {"women", 266197155LL},
    {"much", 265866509LL}, {"sign", 265755197LL}, {"file", 265487626LL},
    {"land", 265113283LL}, {"cards", 264983392LL},
    {"open", 264811389LL}, {"today", 264457529LL},
    {"technology", 263612268LL}, {"south", 263220555LL},
    {"case", 262695699LL}, {"project", 262507260LL},
    {"same", 262311184LL}, {"version", 262096308LL},
    {"section", 261909800LL}, {"own", 261767433LL},
    {"found", 261672211LL}, {"sports", 261251649LL},
    {"house", 260885396LL}, {"related", 260535945LL},
    {"security", 260415656LL}, {"both", 260255482LL},
    {"county", 259795855LL}, {"american", 259666992LL},
    {"photo", 259600674LL}, {"game", 259499766LL},
    {"members", 258856284LL}, {"power", 258856194LL},
    {"while", 258416271LL}, {"care", 258332442LL},
    {"network", 258073508LL}, {"down", 257962526LL},
    {"computer", 257712573LL}, {"systems", 257294433LL},
    {"three", 257161813LL}, {"total", 256530754LL},
    {"place", 256263244LL}, {"end", 256155981LL},
    {"following", 255680446LL}, {"download", 255457257LL},
    {"him", 255058118LL}, {"without", 253772842LL},
    {"per", 253541154LL}, {"access", 253536650LL},
    {"think", 253424547LL}, {"north", 253290112LL},
    {"resources", 253109814LL}, {"current", 252649694LL},
    {"posts", 252332066LL}, {"big", 251926556LL},
    {"media", 251355736LL}, {"law", 251043172LL}, {"control", 250353926LL},
    {"water", 250319271LL}, {"history", 250113226LL},
    {"pictures", 249979784LL}, {"size", 249722892LL},
    {"art", 249595452LL}, {"personal", 249353229LL},
    {"since", 249115478LL}, {"including", 248968331LL},
    {"guide", 248871555LL}, {"shop", 248473682LL},
    {"directory", 248371110LL}, {"board", 246811537LL},
    {"location", 246476996LL}, {"change", 245958330LL},
    {"white", 245796814LL}, {"text", 245264024LL},
    {"small", 245024470LL}, {"rating", 244698712LL},
    {"rate", 244512447LL}, {"government", 244368061LL},
    {"children", 243899779LL}, {"usa", 243748465LL},
    {"street", 243536595LL}, {"japan", 243409271LL},
    {"men", 243373622LL},
    {"look", 242982954LL}, {"works", 242399429LL},
    {"style", 241912850LL}, {"fashion", 145010881LL},
    {"outfit", 42010881LL}, {"dress", 95010881LL},
    {"jeans", 55010881LL}, {"denim", 35010881LL},
    {"jacket", 45010881LL}, {"coat", 38010881LL},
    {"skirt", 33010881LL}, {"shirt", 41010881LL},
    {"blouse", 12010881LL}, {"tunic", 6010881LL},
    {"bag", 61010881LL}, {"bags", 31010881LL},
    {"shoe", 29010881LL}, {"shoes", 49010881LL},
    {"boot", 22010881LL}, {"boots", 30010881LL},
    {"heel", 15010881LL}, {"sneaker", 9010881LL},
    {"jumper", 11010881LL}, {"cardigan", 9510881LL},
    {"sweater", 21010881LL}, {"hoodie", 10010881LL},
    {"sock", 7010881LL}, {"socks", 16010881LL},
    {"scarf", 13010881LL}, {"hat", 25010881LL},
    {"cap", 17010881LL}, {"belt", 14010881LL},
    {"glove", 6510881LL}, {"accessory", 5010881LL},
    {"jewelry", 12510881LL}, {"necklace", 8010881LL},
    {"bracelet", 7510881LL}, {"ring", 24010881LL},
    {"earring", 4510881LL}, {"watch", 39010881LL},
    {"leather", 23010881LL}, {"silk", 13510881LL},
    {"cotton", 19010881LL}, {"wool", 11510881LL},
    {"linen", 7010881LL}, {"suede", 4010881LL},
    {"velvet", 6010881LL}, {"lace", 10510881LL},
    {"polyester", 3510881LL}, {"cashmere", 4210881LL},
    {"felt", 28010881LL}, {"satin", 5510881LL},
    {"stripe", 6210881LL}, {"striped", 5210881LL},
    {"floral", 9010881LL}, {"plaid", 4810881LL},
    {"polka", 2010881LL}, {"dot", 12010881LL},
    {"print", 26010881LL}, {"pattern", 18010881LL},
    {"casual", 13010881LL}, {"chic", 8510881LL},
    {"vintage", 20010881LL}, {"boho", 3010881LL},
    {"classy", 4010881LL}, {"elegant", 9510881LL},
    {"trendy", 5010881LL}, {"glam", 2510881LL},
    {"sporty", 2210881LL}, {"preppy", 1210881LL},
    {"grunge", 1510881LL}, {"minimalist", 2810881LL},
    {"blogger", 15010881LL}, {"blog", 45010881LL},
    {"ootd", 3010881LL}, {"wear", 33010881LL},
    {"wardrobe", 7010881LL}, {"boutique", 6010881LL},
    {"brand", 27010881LL}, {"sale", 52010881LL},
    {"summer", 44010881LL}, {"winter", 36010881LL},
    {"spring", 39010881LL}, {"autumn", 16010881LL},
    {"fall", 31010881LL}, {"beauty", 35010881LL},
    {"makeup", 18010881LL}, {"hair", 47010881LL},
    {"nails", 12010881LL}, {"model", 38010881LL},
    {"photography", 21010881LL}, {"photographer", 9010881LL},
    {"instagood", 2010881LL}, {"love", 210010881LL},
    {"happy", 90010881LL}, {"beautiful", 70010881LL},
    {"cute", 40010881LL}, {"pretty", 35010881LL},
    {"girl", 80010881LL}, {"boy", 50010881LL},
    {"monday", 18010881LL}, {"tuesday", 14010881LL},
    {"wednesday", 13010881LL}, {"thursday", 14510881LL},
    {"friday", 22010881LL}, {"saturday", 19010881LL},
    {"sunday", 20010881LL}, {"weekend", 25010881LL},
    {"goals", 15010881LL}, {"inspiration", 16010881LL},
    {"inspo", 2510881LL}, {"canada", 30010881LL},
    {"london", 32010881LL}, {"paris", 28010881LL},
    {"milan", 9010881LL}, {"york", 36010881LL},
    {"sweden", 11010881LL}, {"stockholm", 6010881LL},
    {"clothing", 24010881LL}, {"cloth", 8010881LL},
    {"tee", 9010881LL}, {"tshirt", 5010881LL},
    {"tops", 28010881LL},
    {"legging", 2010881LL}, {"maxi", 4010881LL},
    {"midi", 3210881LL}, {"mini", 18010881LL},
    {"crop", 8010881LL}, {"fit", 30010881LL},
    {"slim", 10010881LL}, {"skinny", 9010881LL},
    {"run", 60010881LL}, {"running", 30010881LL},
    {"shopping", 33010881LL}, {"gift", 29010881LL},
    {"deal", 24010881LL}, {"discount", 13010881LL},
    {"trend", 12010881LL}, {"season", 26010881LL},
    {"collection", 25010881LL}, {"designer", 16010881LL},
    {"luxury", 14010881LL}, {"couture", 3510881LL},
    {"runway", 4010881LL}, {"week", 73010881LL},
    {"daily", 34010881LL}, {"diary", 7010881LL},
    {"lifestyle", 13010881LL},
    {"food", 81010881LL}, {"fitness", 22010881LL},
    {"gym", 15010881LL}, {"yoga", 13010881LL},
    {"blue", 49010881LL}, {"red", 56010881LL},
    {"green", 46010881LL}, {"pink", 33010881LL},
    {"purple", 16010881LL}, {"yellow", 21010881LL},
    {"orange", 24010881LL}, {"brown", 27010881LL},
    {"grey", 18010881LL}, {"gray", 17010881LL},
    {"gold", 32010881LL}, {"silver", 28010881LL},
    {"beige", 6010881LL}, {"navy", 12010881LL},
    {"khaki", 3010881LL}, {"nude", 9010881LL},
    {"pastel", 3510881LL}, {"neon", 5010881LL},
    {"night", 64010881LL},
    {"morning", 41010881LL}, {"evening", 27010881LL},
    {"party", 48010881LL}, {"event", 35010881LL},
    {"wedding", 31010881LL}, {"beach", 38010881LL},
    {"urban", 12010881LL},
    {"nature", 33010881LL}, {"photooftheday", 1010881LL},
    {"picoftheday", 810881LL}, {"selfie", 8010881LL},
    {"follow", 36010881LL}, {"followme", 1510881LL},
    {"instadaily", 910881LL}, {"repost", 5010881LL},
};

}  // namespace wordlists
}  // namespace fashmine
