// Builds the bundled sentiment lexicon (data/lexicon/chatmine-v1.tsv) from
// the curated stem tables below. Regenerate with:
//   lexgen <output.tsv>
// The scorer treats the output strictly as data; nothing at runtime depends
// on this tool.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

enum : unsigned { LY = 1, NESS = 2, EREST = 4, UN = 8 };

struct Adj {
    const char* w;
    double v;
    unsigned flags = LY;
};

struct Verb {
    const char* w;
    double v;
    bool dbl = false;   // double the final consonant before -ed/-ing
    bool no_ed = false; // irregular past; the real form lives in kFixed
};

struct Noun {
    const char* w;
    double v;
};

struct Fixed {
    const char* w;
    double v;
};

// --- adjectives (expanded to adverbs, optionally -ness / -er / -est / un-) ---

const std::vector<Adj> kAdjectives = {
    // strong positive
    {"excellent", 3.4}, {"amazing", 3.3}, {"awesome", 3.1}, {"fantastic", 3.3},
    {"wonderful", 3.2}, {"perfect", 3.4}, {"brilliant", 3.2}, {"superb", 3.3},
    {"outstanding", 3.4}, {"magnificent", 3.3}, {"marvelous", 3.2}, {"spectacular", 3.2},
    {"exceptional", 3.1}, {"phenomenal", 3.3}, {"incredible", 3.0}, {"terrific", 3.1},
    {"stellar", 3.0}, {"flawless", 3.2}, {"splendid", 3.0}, {"sublime", 2.9},
    {"glorious", 3.0}, {"delightful", 3.0}, {"fabulous", 3.0}, {"extraordinary", 2.9},
    {"remarkable", 2.5}, {"impressive", 2.6}, {"breathtaking", 3.0}, {"stunning", 2.9},
    {"dazzling", 2.7}, {"majestic", 2.6}, {"heavenly", 2.7}, {"divine", 2.3},
    {"magical", 2.3}, {"legendary", 2.2}, {"epic", 2.0}, {"supreme", 2.7},
    // positive
    {"good", 1.9, NESS | UN}, {"great", 3.1, LY | NESS}, {"nice", 1.8, LY | NESS},
    {"fine", 1.4}, {"happy", 2.7, LY | NESS}, {"glad", 2.0, LY},
    {"joyful", 2.9}, {"joyous", 2.8}, {"cheerful", 2.5, LY | NESS}, {"merry", 2.2},
    {"jolly", 2.2, 0}, {"upbeat", 2.0, 0}, {"optimistic", 2.0}, {"hopeful", 1.9},
    {"confident", 2.0}, {"proud", 2.1, LY}, {"grateful", 2.4, LY | UN},
    {"thankful", 2.3, LY | NESS}, {"appreciative", 2.2}, {"content", 1.7},
    {"comfortable", 1.9, LY | UN}, {"cozy", 1.8, 0}, {"calm", 1.5, LY | NESS},
    {"peaceful", 2.0, LY | NESS}, {"relaxed", 1.7, 0}, {"relaxing", 1.8, 0},
    {"safe", 1.8, LY | UN}, {"secure", 1.8, LY}, {"stable", 1.4, UN},
    {"reliable", 2.1, UN}, {"dependable", 2.0}, {"trustworthy", 2.3, 0},
    {"honest", 2.2, LY | NESS}, {"sincere", 2.0, LY | NESS}, {"genuine", 1.9, LY},
    {"authentic", 1.8}, {"fair", 1.6, LY | NESS | UN}, {"generous", 2.2, LY},
    {"kind", 2.3, LY | NESS | UN}, {"friendly", 2.2, NESS | UN}, {"warm", 1.8, LY},
    {"welcoming", 2.1, 0}, {"polite", 2.0, LY | NESS}, {"courteous", 2.1, LY},
    {"respectful", 2.0, LY}, {"considerate", 2.1, LY}, {"thoughtful", 2.1, LY | NESS},
    {"attentive", 1.9, LY}, {"helpful", 2.2, LY | NESS | UN}, {"supportive", 2.1},
    {"caring", 2.2, 0}, {"patient", 1.8, LY}, {"professional", 1.9, LY | UN},
    {"competent", 1.8, LY}, {"capable", 1.7}, {"skilled", 1.8, 0}, {"skillful", 1.9},
    {"knowledgeable", 2.0, 0}, {"smart", 1.9, LY | EREST}, {"clever", 1.9, LY | NESS},
    {"wise", 2.0, LY | EREST}, {"insightful", 2.0}, {"efficient", 1.9},
    {"effective", 1.8, LY | NESS}, {"productive", 1.7, UN}, {"prompt", 1.6, LY | NESS},
    {"quick", 1.3, LY | NESS | EREST}, {"speedy", 1.5, 0}, {"fast", 1.1, EREST},
    {"swift", 1.4, LY | EREST}, {"responsive", 1.8, NESS | UN}, {"smooth", 1.5, LY | EREST},
    {"seamless", 1.9}, {"easy", 1.6, EREST}, {"effortless", 1.8},
    {"simple", 1.2, EREST}, {"straightforward", 1.4}, {"convenient", 1.7, LY},
    {"handy", 1.5, 0}, {"useful", 1.9, LY | NESS}, {"valuable", 2.0},
    {"beneficial", 1.9}, {"worthwhile", 1.9, 0}, {"worthy", 1.8, 0},
    {"affordable", 1.6}, {"economical", 1.4}, {"durable", 1.6}, {"sturdy", 1.5, 0},
    {"solid", 1.4, LY}, {"robust", 1.5, LY | NESS}, {"powerful", 1.7, LY},
    {"strong", 1.5, LY | EREST}, {"crisp", 1.3, LY | EREST}, {"clean", 1.4, LY | EREST},
    {"clear", 1.3, LY | EREST | UN}, {"bright", 1.5, LY | EREST}, {"vivid", 1.4, LY},
    {"sharp", 1.2, LY | EREST}, {"accurate", 1.5, LY | NESS}, {"precise", 1.4, LY},
    {"correct", 1.3, LY | NESS}, {"proper", 1.2, LY}, {"legitimate", 1.3, LY},
    {"lucky", 1.8, UN}, {"fortunate", 1.9, LY | UN}, {"blessed", 2.4, 0},
    {"victorious", 2.4}, {"triumphant", 2.5}, {"successful", 2.2, LY | UN},
    {"winning", 2.0, 0}, {"popular", 1.6, UN}, {"famous", 1.4, LY},
    {"beautiful", 2.9, LY}, {"gorgeous", 3.0, LY}, {"elegant", 2.5, LY},
    {"graceful", 2.3, LY}, {"lovely", 2.8, NESS}, {"charming", 2.6, LY},
    {"attractive", 1.9, UN}, {"pleasant", 2.3, LY | NESS | UN}, {"enjoyable", 2.4},
    {"satisfying", 2.5, 0}, {"gratifying", 2.4, 0}, {"refreshing", 2.2, 0},
    {"admirable", 2.4}, {"commendable", 2.3}, {"exemplary", 2.7, 0},
    {"superior", 2.4, 0}, {"premium", 1.9, 0}, {"deluxe", 1.8, 0},
    {"lively", 1.7, NESS}, {"vibrant", 1.8, LY}, {"energetic", 1.6},
    {"enthusiastic", 2.1}, {"eager", 1.6, LY | NESS}, {"keen", 1.4, LY | NESS},
    {"passionate", 1.9, LY}, {"devoted", 1.8, 0}, {"loyal", 1.9, LY},
    {"faithful", 1.9, LY | NESS | UN}, {"harmonious", 1.9}, {"cordial", 1.8, LY},
    {"gracious", 2.1, LY}, {"humble", 1.4, NESS}, {"modest", 1.2, LY | NESS},
    {"neat", 1.4, LY | NESS | EREST}, {"tidy", 1.3, 0}, {"fresh", 1.4, LY | NESS | EREST},
    {"pure", 1.5, LY | EREST}, {"pristine", 1.9, 0}, {"immaculate", 2.1, LY},
    {"spotless", 1.8}, {"radiant", 2.2, LY}, {"sweet", 1.8, LY | NESS | EREST},
    {"adorable", 2.2}, {"cute", 1.9, NESS | EREST}, {"fun", 2.3, 0},
    {"funny", 1.9, EREST}, {"hilarious", 2.2, LY}, {"amusing", 1.7, LY},
    {"entertaining", 1.8, 0}, {"engaging", 1.7, 0}, {"fascinating", 2.0, LY},
    {"interesting", 1.7, LY | UN}, {"intriguing", 1.6, LY}, {"memorable", 1.7},
    {"special", 1.7, LY}, {"unique", 1.3, LY | NESS}, {"innovative", 1.6},
    {"creative", 1.7, LY}, {"original", 1.2, LY}, {"versatile", 1.4},
    {"flexible", 1.3}, {"ideal", 2.8, LY}, {"favorite", 2.0, 0}, {"favorable", 1.9, UN},
    {"positive", 1.8, LY}, {"healthy", 1.7, UN}, {"vital", 1.3, LY},
    {"rich", 1.4, LY | EREST}, {"plentiful", 1.3}, {"abundant", 1.4, LY},
    {"generative", 1.0, 0}, {"promising", 1.7, 0}, {"encouraging", 1.8, 0},
    {"reassuring", 1.7, 0}, {"soothing", 1.6, 0}, {"uplifting", 2.0, 0},
    {"heartwarming", 2.5, 0}, {"inspiring", 2.2, 0}, {"motivating", 1.8, 0},
    {"empowering", 1.9, 0}, {"rewarding", 2.0, 0}, {"thriving", 2.0, 0},
    {"flourishing", 2.0, 0}, {"prosperous", 2.1, LY}, {"glowing", 1.9, 0},
    {"shiny", 1.3, 0}, {"sparkling", 1.6, 0}, {"brilliantly", 3.0, 0},
    // weak positive
    {"decent", 1.1, LY}, {"adequate", 0.8, LY}, {"sufficient", 0.7, LY | UN},
    {"acceptable", 0.9, UN}, {"reasonable", 1.1, LY | UN}, {"satisfactory", 1.2, UN},
    {"workable", 0.8}, {"usable", 0.9, UN}, {"functional", 0.9},
    {"operational", 0.7}, {"intact", 0.8, 0}, {"normal", 0.5, LY},
    {"standard", 0.3, 0}, {"cool", 1.3, EREST}, {"okay", 0.9, 0},
    // strong negative
    {"terrible", -3.1}, {"horrible", -3.2}, {"awful", -3.0, LY | NESS},
    {"dreadful", -2.9}, {"atrocious", -3.2}, {"abysmal", -3.1, LY},
    {"appalling", -3.0, LY}, {"horrendous", -3.1, LY}, {"hideous", -2.7, LY},
    {"disgusting", -2.9, LY}, {"revolting", -2.8, 0}, {"repulsive", -2.8},
    {"vile", -2.9, 0}, {"foul", -2.4, LY | NESS}, {"rotten", -2.4, NESS},
    {"monstrous", -2.6, LY}, {"ghastly", -2.7, 0}, {"grotesque", -2.4, LY},
    {"catastrophic", -3.0}, {"disastrous", -2.9, LY}, {"horrific", -3.0},
    {"unbearable", -2.5, LY}, {"intolerable", -2.5, LY}, {"insufferable", -2.4, LY},
    // negative
    {"bad", -2.5, LY | NESS}, {"poor", -2.1, LY}, {"nasty", -2.4, 0},
    {"lousy", -2.3, 0}, {"crummy", -2.1, 0}, {"shoddy", -2.2, 0},
    {"subpar", -1.9, 0}, {"mediocre", -1.5, 0}, {"inferior", -1.9, 0},
    {"inadequate", -1.8, LY}, {"insufficient", -1.5, LY}, {"unacceptable", -2.6, LY},
    {"disappointing", -2.2, LY}, {"unsatisfactory", -2.2, 0}, {"displeasing", -1.9, 0},
    {"unpleasant", -2.0, LY | NESS}, {"annoying", -2.1, LY}, {"irritating", -2.1, LY},
    {"aggravating", -2.2, 0}, {"infuriating", -2.8, LY}, {"maddening", -2.5, LY},
    {"frustrating", -2.3, LY}, {"bothersome", -1.8}, {"tiresome", -1.6},
    {"tedious", -1.5, LY}, {"boring", -1.6, LY}, {"dull", -1.4, LY | NESS},
    {"useless", -2.4, LY | NESS}, {"worthless", -2.8, NESS}, {"pointless", -2.0, LY | NESS},
    {"hopeless", -2.4, LY | NESS}, {"helpless", -1.9, LY | NESS}, {"meaningless", -1.9},
    {"defective", -2.3}, {"faulty", -2.2, 0}, {"flawed", -1.9, 0},
    {"damaged", -2.0, 0}, {"busted", -2.0, 0}, {"unreliable", -2.0},
    {"unstable", -1.7}, {"inconsistent", -1.4, LY}, {"erratic", -1.5},
    {"glitchy", -1.9, 0}, {"buggy", -2.0, 0}, {"laggy", -1.7, 0},
    {"sluggish", -1.6, LY | NESS}, {"slow", -1.2, LY | NESS | EREST},
    {"unresponsive", -1.9, NESS}, {"clunky", -1.5, 0}, {"awkward", -1.3, LY | NESS},
    {"clumsy", -1.4, 0}, {"confusing", -1.6, LY}, {"unclear", -1.3, 0},
    {"complicated", -1.2, 0}, {"convoluted", -1.3, 0}, {"cumbersome", -1.5},
    {"inconvenient", -1.6, LY}, {"difficult", -1.5, 0}, {"tricky", -0.9, 0},
    {"impossible", -1.9, 0}, {"wrong", -1.9, LY | NESS}, {"incorrect", -1.4, LY},
    {"inaccurate", -1.4, LY}, {"false", -1.6, LY}, {"misleading", -2.0, LY},
    {"deceptive", -2.2, LY}, {"dishonest", -2.4, LY | NESS}, {"unfair", -2.1, LY | NESS},
    {"unjust", -2.1, LY}, {"rude", -2.4, LY | NESS}, {"impolite", -2.0, LY},
    {"disrespectful", -2.3, LY}, {"arrogant", -2.1, LY}, {"condescending", -2.2, LY},
    {"dismissive", -1.9, LY}, {"hostile", -2.4, 0}, {"aggressive", -1.8, LY},
    {"angry", -2.3, 0}, {"furious", -3.0, LY}, {"enraged", -3.0, 0},
    {"outraged", -2.8, 0}, {"livid", -2.7, 0}, {"irate", -2.6, 0},
    {"mad", -1.9, LY | NESS}, {"upset", -1.9, 0}, {"unhappy", -2.1, 0},
    {"sad", -2.1, LY | NESS}, {"miserable", -2.7, LY}, {"depressing", -2.4, LY},
    {"gloomy", -1.9, 0}, {"grim", -1.8, LY}, {"bleak", -1.8, LY | NESS},
    {"painful", -2.1, LY}, {"hurtful", -2.1, LY}, {"cruel", -2.7, LY},
    {"harsh", -1.8, LY | NESS}, {"severe", -1.5, LY}, {"ugly", -2.2, 0},
    {"gross", -2.1, LY}, {"stale", -1.3, NESS}, {"flimsy", -1.6, 0},
    {"fragile", -1.1, 0}, {"weak", -1.4, LY | NESS | EREST}, {"feeble", -1.5, NESS},
    {"pathetic", -2.5}, {"ridiculous", -1.9}, {"absurd", -1.8, LY | NESS},
    {"stupid", -2.3, LY}, {"dumb", -2.1, LY | NESS | EREST}, {"idiotic", -2.5},
    {"foolish", -1.9, LY | NESS}, {"careless", -1.9, LY | NESS}, {"negligent", -2.2, LY},
    {"sloppy", -1.9, 0}, {"lazy", -1.8, 0}, {"incompetent", -2.4, LY},
    {"unprofessional", -2.3, LY}, {"unhelpful", -2.1, LY}, {"dirty", -1.7, 0},
    {"filthy", -2.3, 0}, {"messy", -1.4, 0}, {"noisy", -1.3, 0},
    {"loud", -0.9, LY | EREST}, {"faint", -0.9, LY | EREST}, {"dim", -1.0, LY | EREST},
    {"blurry", -1.3, 0}, {"fuzzy", -0.9, 0}, {"distorted", -1.4, 0},
    {"corrupt", -2.4, LY}, {"malicious", -2.6, LY}, {"dangerous", -2.0, LY},
    {"risky", -1.4, 0}, {"unsafe", -1.9, LY}, {"insecure", -1.6, LY},
    {"vulnerable", -1.4, 0}, {"suspicious", -1.5, LY}, {"shady", -1.8, 0},
    {"sketchy", -1.7, 0}, {"fake", -2.0, 0}, {"counterfeit", -2.2, 0},
    {"bogus", -2.1, 0}, {"phony", -2.0, 0}, {"scandalous", -2.3, LY},
    {"shameful", -2.4, LY}, {"disgraceful", -2.5, LY}, {"embarrassing", -1.9, LY},
    {"humiliating", -2.4, LY}, {"insulting", -2.3, LY}, {"offensive", -2.3, LY},
    {"obnoxious", -2.3, LY}, {"outrageous", -2.2, LY}, {"excessive", -1.4, LY},
    {"expensive", -0.9, LY}, {"overpriced", -1.8, 0}, {"costly", -1.1, 0},
    {"wasteful", -1.8, LY | NESS}, {"futile", -1.9, LY}, {"desperate", -1.8, LY},
    {"dire", -1.9, LY}, {"defunct", -1.7, 0}, {"dead", -2.1, LY},
    {"broken", -2.2, 0},
    {"jammed", -1.4, 0}, {"stuck", -1.4, 0}, {"frozen", -1.3, 0},
    {"unusable", -2.2, 0}, {"unworkable", -1.9, 0}, {"hollow", -1.0, LY | NESS},
    {"cheap", -0.8, LY | EREST}, {"petty", -1.5, 0}, {"bitter", -1.8, LY | NESS},
    {"sour", -1.5, LY | NESS}, {"bland", -1.1, LY | NESS}, {"mundane", -0.9, LY},
    {"dreary", -1.6, 0}, {"dismal", -2.0, LY}, {"pitiful", -2.1, LY},
    {"lame", -1.7, LY | NESS}, {"terrifying", -2.7, LY}, {"frightening", -2.3, LY},
    {"scary", -1.9, 0}, {"alarming", -1.8, LY}, {"troubling", -1.8, 0},
    {"worrisome", -1.6, 0}, {"stressful", -1.9, LY}, {"exhausting", -1.7, 0},
    {"draining", -1.5, 0}, {"toxic", -2.3, 0}, {"harmful", -2.0, LY},
    {"damaging", -1.9, 0}, {"destructive", -2.2, LY}, {"defeated", -1.9, 0},
    {"doomed", -2.2, 0}, {"cursed", -2.2, 0}, {"dysfunctional", -2.0, 0},
    {"inoperable", -1.9, 0}, {"nonfunctional", -1.8, 0}, {"deficient", -1.6, LY},
    {"lacking", -1.2, 0}, {"missing", -1.3, 0}, {"incomplete", -1.2, LY},
    {"unfinished", -1.1, 0}, {"neglected", -1.8, 0}, {"ignored", -1.7, 0},
    {"abandoned", -1.9, 0}, {"betrayed", -2.4, 0}, {"cheated", -2.3, 0},
    {"scammed", -2.5, 0}, {"robbed", -2.4, 0}, {"ripped", -1.5, 0},
    {"anxious", -1.6, LY}, {"nervous", -1.4, LY | NESS}, {"afraid", -1.8, 0},
    {"fearful", -1.9, LY}, {"apprehensive", -1.3, LY}, {"uneasy", -1.3, 0},
    {"uncomfortable", -1.6, LY}, {"ashamed", -2.0, 0}, {"guilty", -1.7, 0},
    {"regretful", -1.7, LY}, {"sorrowful", -2.2, LY}, {"mournful", -2.1, LY},
    {"heartbroken", -2.7, 0}, {"devastated", -2.8, 0}, {"crushed", -2.2, 0},
    {"shattered", -2.2, 0}, {"ruined", -2.3, 0}, {"wrecked", -2.1, 0},
};

// --- verbs (base, -s, -ed, -ing) ---------------------------------------------

const std::vector<Verb> kVerbs = {
    {"help", 1.7}, {"assist", 1.6}, {"support", 1.7}, {"resolve", 1.6},
    {"fix", 1.3}, {"repair", 1.2}, {"improve", 1.6}, {"enhance", 1.5},
    {"restore", 1.2}, {"recover", 1.2}, {"succeed", 2.0}, {"achieve", 1.8},
    {"accomplish", 1.8}, {"win", 2.4, true, true}, {"thank", 1.9}, {"appreciate", 2.0},
    {"enjoy", 2.2}, {"love", 3.2}, {"adore", 2.9}, {"like", 1.5},
    {"admire", 2.1}, {"praise", 2.3}, {"compliment", 2.0}, {"congratulate", 2.2},
    {"celebrate", 2.2}, {"delight", 2.5}, {"satisfy", 1.9}, {"impress", 2.0},
    {"amaze", 2.4}, {"astonish", 1.9}, {"excite", 1.9}, {"thrill", 2.4},
    {"inspire", 2.2}, {"encourage", 1.9}, {"motivate", 1.8}, {"reassure", 1.7},
    {"comfort", 1.8}, {"soothe", 1.6}, {"smile", 2.0}, {"laugh", 2.2},
    {"cheer", 2.2}, {"welcome", 1.9}, {"greet", 1.3}, {"trust", 1.9},
    {"respect", 2.0}, {"honor", 2.1}, {"reward", 2.0}, {"benefit", 1.7},
    {"save", 1.5}, {"protect", 1.6}, {"guarantee", 1.3}, {"recommend", 1.8},
    {"endorse", 1.6}, {"approve", 1.6}, {"agree", 1.2}, {"accept", 1.1},
    {"embrace", 1.6}, {"care", 1.8}, {"donate", 1.7}, {"forgive", 1.9, false, true},
    {"heal", 1.8}, {"brighten", 1.9}, {"shine", 1.7}, {"sparkle", 1.8},
    {"flourish", 1.9}, {"thrive", 2.0}, {"prosper", 2.0}, {"bloom", 1.6},
    {"glow", 1.5}, {"favor", 1.4}, {"cherish", 2.3}, {"treasure", 2.2},
    {"value", 1.6}, {"empower", 1.9}, {"uplift", 2.0}, {"relieve", 1.6},
    {"rescue", 1.9}, {"simplify", 1.2}, {"clarify", 1.0}, {"streamline", 1.2},
    {"succeed", 2.0}, {"gain", 1.4}, {"earn", 1.2}, {"grant", 1.1},
    // negative
    {"fail", -2.3}, {"break", -1.8, false, true}, {"crash", -2.0}, {"freeze", -1.1, false, true},
    {"malfunction", -2.0}, {"disconnect", -1.2}, {"interrupt", -1.2}, {"disrupt", -1.6},
    {"damage", -2.0}, {"destroy", -2.5}, {"ruin", -2.4}, {"wreck", -2.2},
    {"harm", -2.1}, {"hurt", -2.1}, {"injure", -1.9}, {"suffer", -2.2},
    {"struggle", -1.7}, {"annoy", -2.0}, {"irritate", -2.0}, {"aggravate", -2.0},
    {"infuriate", -2.6}, {"frustrate", -2.2}, {"bother", -1.6}, {"disturb", -1.7},
    {"anger", -2.2}, {"enrage", -2.6}, {"offend", -2.1}, {"insult", -2.3},
    {"mock", -2.0}, {"ridicule", -2.2}, {"blame", -1.8}, {"accuse", -1.8},
    {"complain", -1.7}, {"criticize", -1.7}, {"condemn", -2.1}, {"reject", -1.8},
    {"refuse", -1.5}, {"deny", -1.5}, {"ignore", -1.8}, {"neglect", -2.0},
    {"abandon", -2.1}, {"betray", -2.6}, {"deceive", -2.3}, {"cheat", -2.4},
    {"steal", -2.4, false, true}, {"scam", -2.6, true}, {"swindle", -2.5}, {"threaten", -2.3},
    {"harass", -2.6}, {"abuse", -2.8}, {"disappoint", -2.1}, {"dissatisfy", -2.1},
    {"displease", -1.9}, {"worry", -1.8}, {"panic", -2.0}, {"fear", -1.9},
    {"dread", -2.2}, {"hate", -3.0}, {"despise", -2.7}, {"loathe", -2.7},
    {"detest", -2.6}, {"resent", -2.1}, {"regret", -1.9, true}, {"cry", -2.0},
    {"weep", -2.0, false, true}, {"whine", -1.7}, {"moan", -1.4}, {"groan", -1.5},
    {"stall", -1.2}, {"delay", -1.3}, {"cancel", -1.4}, {"lose", -1.9, false, true},
    {"waste", -1.9}, {"leak", -1.3}, {"drain", -1.2}, {"overheat", -1.5},
    {"shatter", -1.9}, {"smash", -1.8}, {"explode", -1.6}, {"collapse", -1.9},
    {"degrade", -1.6}, {"deteriorate", -1.8}, {"worsen", -1.9}, {"corrupt", -2.4},
    {"mislead", -2.0, false, true}, {"confuse", -1.5}, {"complicate", -1.2}, {"obstruct", -1.5},
    {"block", -1.1}, {"restrict", -1.0}, {"limit", -0.8}, {"deprive", -1.8},
    {"punish", -1.8}, {"penalize", -1.7}, {"sue", -1.8}, {"dispute", -1.3},
    {"argue", -1.3}, {"fight", -1.8, false, true}, {"quarrel", -1.6}, {"yell", -1.8},
    {"shout", -1.4}, {"scream", -1.8}, {"curse", -1.9}, {"swear", -1.4, false, true},
    {"mess", -1.4}, {"bungle", -1.8}, {"botch", -1.9}, {"sabotage", -2.3},
    {"overcharge", -1.9}, {"misbehave", -1.6}, {"err", -1.2}, {"falter", -1.3},
    {"flounder", -1.4}, {"stumble", -1.2}, {"slip", -0.9, true}, {"sink", -1.4, false, true},
    {"plummet", -1.6}, {"tumble", -1.1}, {"languish", -1.5}, {"stagnate", -1.3},
};

// --- nouns (base, plural) ------------------------------------------------------

const std::vector<Noun> kNouns = {
    {"pleasure", 2.6}, {"joy", 2.8}, {"satisfaction", 2.2}, {"gratitude", 2.3},
    {"appreciation", 2.1}, {"success", 2.2}, {"victory", 2.4}, {"triumph", 2.4},
    {"achievement", 2.0}, {"accomplishment", 1.9}, {"progress", 1.6}, {"improvement", 1.7},
    {"solution", 1.4}, {"advantage", 1.5}, {"bonus", 1.8}, {"gift", 1.9},
    {"prize", 2.0}, {"treat", 1.7}, {"miracle", 2.6}, {"wonder", 1.9},
    {"beauty", 2.2}, {"charm", 1.8}, {"grace", 1.9}, {"relief", 1.9},
    {"hope", 1.9}, {"luck", 1.8}, {"fortune", 1.9}, {"paradise", 2.9},
    {"heaven", 2.5}, {"hero", 2.2}, {"champion", 2.2}, {"winner", 2.1},
    {"friend", 1.9}, {"laughter", 2.2}, {"kindness", 2.3}, {"courtesy", 1.9},
    {"warmth", 1.9}, {"harmony", 1.9}, {"peace", 2.1}, {"delight", 2.6},
    {"masterpiece", 2.8}, {"gem", 2.2}, {"blessing", 2.4}, {"upside", 1.4},
    {"strength", 1.5}, {"quality", 1.3}, {"excellence", 2.8}, {"perfection", 2.9},
    {"brilliance", 2.6}, {"glory", 2.4}, {"honor", 2.1}, {"pride", 1.8},
    {"confidence", 1.8}, {"optimism", 2.0}, {"enthusiasm", 2.0}, {"passion", 1.9},
    {"devotion", 1.8}, {"loyalty", 1.9}, {"integrity", 2.1}, {"honesty", 2.2},
    {"fairness", 1.8}, {"generosity", 2.2}, {"compassion", 2.2}, {"empathy", 1.9},
    {"patience", 1.6}, {"wisdom", 2.0}, {"insight", 1.6}, {"expertise", 1.7},
    {"competence", 1.6}, {"efficiency", 1.7}, {"reliability", 1.9}, {"durability", 1.5},
    {"convenience", 1.6}, {"comfort", 1.8}, {"ease", 1.5}, {"clarity", 1.4},
    {"freedom", 2.0}, {"opportunity", 1.6}, {"promise", 1.4}, {"potential", 1.2},
    {"benefit", 1.6}, {"value", 1.4}, {"worth", 1.4}, {"reward", 2.0},
    // negative
    {"problem", -1.7}, {"issue", -1.1}, {"trouble", -1.8}, {"failure", -2.3},
    {"fault", -1.8}, {"defect", -2.0}, {"flaw", -1.7}, {"error", -1.5},
    {"mistake", -1.6}, {"bug", -1.6}, {"glitch", -1.6}, {"outage", -1.9},
    {"breakdown", -2.0}, {"disaster", -3.0}, {"catastrophe", -3.0}, {"nightmare", -2.8},
    {"chaos", -2.0}, {"crisis", -2.2}, {"emergency", -1.8}, {"danger", -2.0},
    {"threat", -2.0}, {"risk", -1.1}, {"concern", -1.1}, {"doubt", -1.2},
    {"confusion", -1.4}, {"frustration", -2.2}, {"annoyance", -1.9}, {"irritation", -1.9},
    {"rage", -2.6}, {"fury", -2.6}, {"hatred", -2.9}, {"disgust", -2.5},
    {"misery", -2.6}, {"pain", -2.2}, {"agony", -2.6}, {"grief", -2.4},
    {"sorrow", -2.3}, {"shame", -2.2}, {"embarrassment", -1.9}, {"offense", -1.8},
    {"complaint", -1.6}, {"objection", -1.2}, {"conflict", -1.6}, {"enemy", -2.2},
    {"liar", -2.6}, {"thief", -2.5}, {"fraud", -2.7}, {"junk", -1.9},
    {"garbage", -2.2}, {"trash", -2.1}, {"rubbish", -2.0}, {"inconvenience", -1.6},
    {"burden", -1.6}, {"obstacle", -1.3}, {"barrier", -1.1}, {"setback", -1.6},
    {"downgrade", -1.4}, {"penalty", -1.6}, {"debt", -1.6}, {"victim", -1.9},
    {"loss", -1.8}, {"damage", -2.0}, {"harm", -2.1}, {"injury", -1.9},
    {"wound", -1.8}, {"bruise", -1.3}, {"scar", -1.3}, {"dent", -1.2},
    {"stain", -1.2}, {"smudge", -0.9}, {"blemish", -1.2}, {"defeat", -1.9},
    {"downtime", -1.5}, {"lag", -1.4}, {"static", -0.8}, {"interference", -1.1},
    {"distortion", -1.2}, {"corruption", -2.2}, {"vulnerability", -1.4}, {"exploit", -1.6},
    {"violation", -1.9}, {"breach", -1.8}, {"theft", -2.3}, {"crime", -2.2},
    {"abuse", -2.8}, {"insult", -2.3}, {"mockery", -2.0}, {"disgrace", -2.4},
    {"scandal", -2.2}, {"lie", -1.8}, {"excuse", -1.1}, {"runaround", -1.8},
    {"hassle", -1.7}, {"headache", -1.8}, {"ordeal", -1.9}, {"struggle", -1.7},
    {"difficulty", -1.5}, {"hardship", -1.8}, {"misfortune", -2.0}, {"tragedy", -2.6},
    {"despair", -2.5}, {"anguish", -2.5}, {"distress", -2.0}, {"anxiety", -1.7},
    {"stress", -1.8}, {"tension", -1.3}, {"panic", -2.0}, {"terror", -2.7},
    {"horror", -2.7}, {"dread", -2.2}, {"gripe", -1.4}, {"grievance", -1.6},
};

// --- fixed forms: irregulars, interjections, chat slang ------------------------

const std::vector<Fixed> kFixed = {
    {"best", 3.2}, {"better", 1.9}, {"worse", -2.1}, {"worst", -3.1},
    {"pleased", 1.9}, {"pleasing", 1.9}, {"pleases", 1.9},
    {"loved", 2.9}, {"loving", 2.9}, {"beloved", 2.7},
    {"broke", -1.6}, {"yeah", 1.2}, {"yes", 1.3}, {"yep", 1.1}, {"yup", 1.1},
    {"wow", 2.8}, {"yay", 2.4}, {"hooray", 2.6}, {"bravo", 2.7},
    {"congrats", 2.4}, {"congratulations", 2.9}, {"thanks", 1.9}, {"thx", 1.6},
    {"ok", 0.9}, {"alright", 1.0}, {"sorry", -0.9}, {"unfortunately", -1.3},
    {"unfortunate", -1.6}, {"unable", -1.4}, {"oops", -1.1}, {"ouch", -1.6},
    {"ugh", -1.8}, {"meh", -0.9}, {"bleh", -1.2}, {"damn", -1.6},
    {"dammit", -2.2}, {"darn", -1.3}, {"hell", -1.7}, {"wtf", -2.4},
    {"lol", 1.6}, {"lmao", 1.9}, {"rofl", 2.0}, {"haha", 1.8},
    {"hehe", 1.4}, {"woohoo", 2.7}, {"phew", 1.0}, {"alas", -1.4},
    {"gosh", 0.6}, {"geez", -0.8}, {"jeez", -0.8}, {"welp", -0.7},
    {"nah", -0.7}, {"bleak", -1.8}, {"gr8", 2.4}, {"luv", 2.6},
    {"awsome", 3.0}, {"awesomeness", 3.0}, {"plz", 0.3}, {"pls", 0.3},
    {"goodness", 1.9}, {"happiness", 2.6}, {"sadness", -2.1}, {"greatness", 2.6},
    {"won", 2.2}, {"lost", -1.7}, {"stole", -2.3}, {"stolen", -2.3},
    {"wept", -2.0}, {"swore", -1.4}, {"sank", -1.4}, {"misled", -2.0},
    {"fought", -1.8}, {"froze", -1.2},
    {"fell", -0.9}, {"forgave", 1.8}, {"forgiven", 1.8},
    {"hurts", -2.1}, {"worried", -1.8}, {"worrying", -1.7}, {"worries", -1.8},
    {"cried", -2.0}, {"crying", -2.0}, {"cries", -2.0},
    {"denied", -1.5}, {"denies", -1.5}, {"denying", -1.5},
    {"lied", -2.1}, {"lying", -2.0}, {"lies", -1.8},
    {"apology", -0.4}, {"apologies", -0.4}, {"apologize", -0.4}, {"apologized", -0.4},
    {"apologizes", -0.4}, {"apologizing", -0.4},
    {"grateful", 2.4}, {"gratefully", 2.4},
    {"fond", 1.7}, {"fondly", 1.7}, {"silly", -1.1}, {"crazy", -0.8},
    {"insane", -0.8}, {"epic", 2.0}, {"fail", -2.3}, {"failing", -2.2},
    {"fav", 1.9}, {"fave", 1.9}, {"noob", -1.4}, {"meltdown", -2.2},
    {"rip", -1.5}, {"ripoff", -2.2}, {"bs", -1.9}, {"omfg", -1.0},
    {"smh", -1.3}, {"ffs", -2.1}, {"yikes", -1.2}, {"eek", -1.0},
    {"eww", -1.9}, {"ew", -1.8}, {"hmph", -1.0}, {"grr", -1.6},
    {"argh", -1.7}, {"aargh", -1.7}, {"dang", -1.2}, {"shoot", -0.9},
    {"whatever", -0.8}, {"useless", -2.4}, {"sucks", -2.2}, {"suck", -2.1},
    {"sucked", -2.1}, {"stinks", -1.8}, {"stink", -1.7}, {"crap", -2.3},
    {"crappy", -2.4}, {"bullshit", -2.6}, {"freaking", -1.2}, {"frickin", -1.2},
    {"dumbest", -2.5}, {"smartest", 2.2}, {"kindest", 2.5}, {"meanest", -2.4},
    {"mean", -1.4}, {"meaner", -1.7}, {"evil", -2.9}, {"wicked", -1.9},
    {"brutal", -2.1}, {"savage", -1.7}, {"fierce", -1.1}, {"grumpy", -1.7},
    {"cranky", -1.6}, {"moody", -1.3}, {"stubborn", -1.4}, {"picky", -0.9},
    {"needy", -1.1}, {"greedy", -1.9}, {"selfish", -2.0}, {"jealous", -1.6},
    {"envious", -1.4}, {"bored", -1.5}, {"boredom", -1.5}, {"tired", -1.3},
    {"exhausted", -1.8}, {"drained", -1.5}, {"overwhelmed", -1.6}, {"swamped", -1.3},
    {"stressed", -1.9}, {"relieved", 1.7}, {"satisfied", 2.0}, {"dissatisfied", -2.2},
    {"unsatisfied", -2.0}, {"displeased", -1.9}, {"discontent", -1.6}, {"content", 1.7},
    {"contented", 1.7}, {"thrilled", 2.8}, {"ecstatic", 3.0}, {"overjoyed", 3.0},
    {"elated", 2.8}, {"euphoric", 2.9}, {"cheery", 2.2}, {"chipper", 1.9},
    {"giddy", 1.6}, {"gleeful", 2.4}, {"blissful", 2.7}, {"bliss", 2.7},
    {"serene", 1.9}, {"tranquil", 1.8}, {"mellow", 1.2}, {"chill", 1.1},
    {"superior", 2.4}, {"paramount", 1.8}, {"prime", 1.5}, {"topnotch", 2.8},
    {"worldclass", 2.7}, {"firstrate", 2.6}, {"ace", 2.2}, {"stoked", 2.4},
    {"psyched", 2.2}, {"pumped", 2.0}, {"hyped", 1.9}, {"wonderfully", 3.2},
    {"genius", 2.4}, {"godsend", 2.8}, {"lifesaver", 2.8}, {"seamlessly", 1.9},
    {"effortlessly", 1.8}, {"gladly", 2.0}, {"happily", 2.7}, {"luckily", 1.8},
    {"thankfully", 2.1}, {"fortunately", 1.9}, {"regrettably", -1.7}, {"sadly", -2.0},
    {"tragically", -2.4}, {"horribly", -3.0}, {"terribly", -2.9}, {"awfully", -2.3},
    {"painfully", -2.0}, {"miserably", -2.6}, {"woefully", -2.1}, {"dishearteningly", -1.9},
    {"disheartening", -2.0}, {"disheartened", -2.0}, {"discouraged", -1.8},
    {"discouraging", -1.8}, {"demoralized", -2.0}, {"demoralizing", -2.0},
    {"appalled", -2.6}, {"disgusted", -2.7}, {"horrified", -2.7}, {"shocked", -1.6},
    {"stunned", -1.2}, {"baffled", -1.3}, {"puzzled", -1.0}, {"perplexed", -1.2},
    {"bewildered", -1.3}, {"lousier", -2.4}, {"glitched", -1.7}, {"bricked", -2.3},
    {"fried", -1.6}, {"toast", -1.4}, {"kaput", -1.8},
};

// --- second vocabulary tranche ---------------------------------------------------

const std::vector<Adj> kAdjectives2 = {
    {"agreeable", 1.8}, {"amiable", 1.9}, {"affable", 1.8}, {"benevolent", 2.1},
    {"compassionate", 2.2}, {"cooperative", 1.6, UN}, {"dedicated", 1.8, 0},
    {"diligent", 1.8}, {"dynamic", 1.4}, {"earnest", 1.6}, {"exquisite", 2.7},
    {"festive", 1.9}, {"fulfilling", 2.1, 0}, {"gentle", 1.8, NESS},
    {"heroic", 2.3}, {"hospitable", 1.9}, {"humane", 1.9}, {"illustrious", 2.2},
    {"incomparable", 2.3}, {"indispensable", 1.9}, {"invaluable", 2.2},
    {"inviting", 1.8, 0}, {"irresistible", 2.0}, {"laudable", 2.1}, {"lucid", 1.3},
    {"luminous", 1.7}, {"masterful", 2.4}, {"meticulous", 1.7}, {"mighty", 1.6, 0},
    {"miraculous", 2.6}, {"noble", 2.0}, {"nurturing", 1.9, 0}, {"obliging", 1.6, 0},
    {"optimal", 1.8}, {"opulent", 1.8}, {"peerless", 2.2}, {"perceptive", 1.7},
    {"persuasive", 1.4}, {"plush", 1.4, 0}, {"poised", 1.4, 0}, {"polished", 1.6, 0},
    {"prolific", 1.5}, {"punctual", 1.5},  {"quaint", 1.2}, {"resilient", 1.7},
    {"resourceful", 1.8}, {"respectable", 1.6}, {"savvy", 1.6, 0}, {"selfless", 2.1},
    {"sensible", 1.4}, {"sleek", 1.6}, {"snappy", 1.4, 0}, {"sociable", 1.5},
    {"sophisticated", 1.6}, {"spirited", 1.5, 0}, {"steadfast", 1.8},
    {"suave", 1.5}, {"sumptuous", 1.9}, {"tactful", 1.7}, {"talented", 1.9, 0},
    {"tenacious", 1.5}, {"tender", 1.8, LY | NESS}, {"thorough", 1.4, LY | NESS},
    {"tolerant", 1.4}, {"trustful", 1.7}, {"unbeatable", 2.3}, {"unmatched", 2.1, 0},
    {"unparalleled", 2.2, 0}, {"upstanding", 1.8, 0}, {"vigilant", 1.3},
    {"virtuous", 2.0}, {"vivacious", 1.9}, {"wholesome", 1.8, NESS}, {"witty", 1.8, 0},
    {"zealous", 1.4}, {"zesty", 1.4, 0}, {"agile", 1.4}, {"ample", 1.2, 0},
    {"apt", 1.2, LY | NESS}, {"astute", 1.6}, {"balanced", 1.2, 0}, {"bold", 1.4, LY | NESS},
    {"brave", 1.9, LY | EREST}, {"candid", 1.4}, {"carefree", 1.5, 0},
    {"cherished", 2.2, 0}, {"civil", 1.2}, {"classy", 1.7, 0}, {"comforting", 1.8, 0},
    {"compelling", 1.5, 0}, {"concise", 1.2}, {"consistent", 1.2, LY},
    {"constructive", 1.4}, {"courageous", 2.0}, {"credible", 1.3}, {"cultured", 1.3, 0},
    {"daring", 1.3, 0}, {"dashing", 1.7, 0}, {"decisive", 1.3}, {"delicate", 1.0},
    {"desirable", 1.6, UN}, {"dignified", 1.7, 0}, {"discerning", 1.4, 0},
    {"distinguished", 1.8, 0}, {"dutiful", 1.4}, {"eloquent", 1.7}, {"eminent", 1.6},
    {"enchanting", 2.2, 0}, {"endearing", 1.9, 0}, {"enduring", 1.3, 0},
    {"enlightening", 1.8, 0}, {"enriching", 1.7, 0}, {"esteemed", 1.8, 0},
    {"ethical", 1.6, UN}, {"exuberant", 2.0}, {"fearless", 1.8, LY | NESS},
    {"fitting", 1.1, 0}, {"fluent", 1.4}, {"forgiving", 1.8, UN}, {"forthright", 1.4, 0},
    {"frank", 1.2, LY | NESS}, {"gallant", 1.7}, {"gifted", 1.9, 0},
    {"glistening", 1.4, 0}, {"grand", 2.0, LY | EREST | NESS}, {"gripping", 1.5, 0},
    {"hearty", 1.5, 0}, {"honorable", 2.0}, {"idyllic", 2.1}, {"immersive", 1.5},
    {"impeccable", 2.3}, {"influential", 1.4}, {"ingenious", 2.1}, {"innocent", 1.4},
    {"instructive", 1.3}, {"intelligent", 1.9, UN}, {"intuitive", 1.6, UN},
    {"inventive", 1.6}, {"jubilant", 2.4}, {"judicious", 1.5}, {"legible", 1.0},
    {"liberating", 1.8, 0}, {"lighthearted", 1.7, 0}, {"likable", 1.8, UN},
    {"lustrous", 1.5}, {"luxurious", 2.0}, {"magnanimous", 1.9}, {"mindful", 1.4},
    {"momentous", 1.6}, {"moral", 1.4, LY | UN}, {"motivated", 1.5, 0},
    {"nifty", 1.5, 0}, {"nimble", 1.3, 0}, {"notable", 1.3}, {"noteworthy", 1.4, 0},
    {"nourishing", 1.5, 0}, {"nuanced", 1.1, 0}, {"observant", 1.3},
    {"orderly", 1.2, NESS}, {"organized", 1.3, 0}, {"outgoing", 1.4, 0},
    {"palatable", 1.1, UN}, {"perky", 1.5, 0}, {"personable", 1.7},
    {"philanthropic", 1.8}, {"playful", 1.6, LY | NESS}, {"praiseworthy", 2.1, 0},
    {"precious", 2.1, LY | NESS}, {"prestigious", 1.8}, {"priceless", 2.4, 0},
    {"principled", 1.6, 0}, {"proactive", 1.4}, {"prodigious", 1.6},
    {"proficient", 1.6}, {"profound", 1.6, LY | NESS}, {"prudent", 1.4},
    {"refined", 1.5, 0}, {"regal", 1.7}, {"resplendent", 2.2}, {"righteous", 1.7},
    {"romantic", 1.7}, {"rosy", 1.5, 0}, {"saintly", 2.0, 0}, {"seasoned", 1.2, 0},
    {"sensational", 2.5}, {"snug", 1.3, LY | NESS}, {"soulful", 1.6},
    {"spacious", 1.3}, {"sparkly", 1.5, 0}, {"spiffy", 1.6, 0}, {"stately", 1.5, 0},
    {"stimulating", 1.5, 0}, {"striking", 1.5, 0}, {"stylish", 1.7, LY | NESS},
    {"suitable", 1.0, UN}, {"sunny", 1.6, 0}, {"superlative", 2.3}, {"surefire", 1.7, 0},
    {"swell", 1.7, 0}, {"tasteful", 1.5, LY | NESS}, {"tasty", 1.7, 0},
    {"tempting", 1.4, 0}, {"timeless", 1.6}, {"timely", 1.3, 0}, {"top", 1.5, 0},
    {"transformative", 1.6}, {"transparent", 1.3, LY}, {"treasured", 2.1, 0},
    {"tremendous", 2.4}, {"trusty", 1.6, 0}, {"truthful", 1.8, LY | NESS},
    {"unassuming", 1.2, 0}, {"unblemished", 1.7, 0}, {"uncomplicated", 1.3, 0},
    {"understanding", 1.8, 0}, {"unfailing", 1.8}, {"untarnished", 1.5, 0},
    {"valiant", 1.9}, {"valid", 1.1, LY | UN}, {"venerable", 1.7},
    {"warmhearted", 2.1, 0}, {"willing", 1.1, UN}, {"winsome", 1.7},
    {"wondrous", 2.4}, {"workmanlike", 1.0, 0}, {"zippy", 1.4, 0},
    // negative
    {"abrasive", -1.7}, {"accusatory", -1.7}, {"acrimonious", -1.9}, {"agonizing", -2.5},
    {"aimless", -1.3}, {"aloof", -1.2}, {"amateurish", -1.7}, {"antagonistic", -1.9},
    {"apathetic", -1.5}, {"arduous", -1.4}, {"baffling", -1.3, 0}, {"banal", -1.2},
    {"barbaric", -2.4}, {"belligerent", -2.0}, {"bewildering", -1.3, 0},
    {"biased", -1.5, 0}, {"bizarre", -1.2}, {"bloated", -1.2, 0}, {"boorish", -1.8},
    {"brash", -1.3, LY | NESS}, {"brittle", -1.2, NESS}, {"bumpy", -1.1, 0},
    {"bungled", -1.9, 0}, {"burdensome", -1.6}, {"callous", -2.0},
    {"chaotic", -1.8}, {"chilling", -1.7, 0}, {"clueless", -1.8, LY | NESS},
    {"coarse", -1.2, LY | NESS}, {"cold", -0.7, LY | NESS | EREST}, {"combative", -1.6},
    {"conceited", -1.8, 0}, {"confounding", -1.3, 0}, {"contemptuous", -2.0},
    {"contentious", -1.5}, {"corrosive", -1.6}, {"crass", -1.7, LY | NESS},
    {"crooked", -1.8, LY | NESS}, {"crude", -1.5, LY | NESS}, {"cryptic", -1.1},
    {"cynical", -1.5}, {"daunting", -1.4, LY}, {"deadly", -2.3, 0},
    {"deceitful", -2.3}, {"deformed", -1.7, 0}, {"degrading", -2.2, 0},
    {"dejected", -2.0, LY}, {"delinquent", -1.8}, {"deluded", -1.6, 0},
    {"demeaning", -2.1, 0}, {"deplorable", -2.5}, {"derelict", -1.6, 0},
    {"derisive", -1.8}, {"despicable", -2.6}, {"despondent", -2.2, LY},
    {"detestable", -2.5}, {"detrimental", -1.8}, {"devious", -1.8},
    {"dishonorable", -2.2}, {"disjointed", -1.3, 0}, {"dismaying", -1.7, 0},
    {"disorganized", -1.5, 0}, {"disorderly", -1.4, 0}, {"disparaging", -1.8, 0},
    {"dispiriting", -1.8, 0}, {"disquieting", -1.5, 0}, {"distasteful", -1.8},
    {"distraught", -2.1, 0}, {"distressing", -2.0, LY}, {"disturbing", -1.9, LY},
    {"divisive", -1.4}, {"dodgy", -1.6, 0}, {"doubtful", -1.2, LY},
    {"downcast", -1.8, 0}, {"draconian", -1.8}, {"dubious", -1.4},
    {"egregious", -2.2}, {"enraging", -2.6, 0}, {"erroneous", -1.5},
    {"evasive", -1.4}, {"exasperating", -2.1, LY}, {"exorbitant", -1.8},
    {"faithless", -1.8}, {"farcical", -1.7}, {"fickle", -1.3, NESS},
    {"fiendish", -1.9}, {"flagrant", -1.7}, {"flaky", -1.4, 0},
    {"forgettable", -1.2, 0}, {"forlorn", -1.9, LY | NESS}, {"fraudulent", -2.4},
    {"frightful", -2.2}, {"frivolous", -1.3}, {"fruitless", -1.6, LY | NESS},
    {"gaudy", -1.2, 0}, {"glaring", -1.4, 0}, {"graceless", -1.5},
    {"grating", -1.5, 0}, {"grievous", -2.1}, {"grubby", -1.3, 0},
    {"grueling", -1.7, 0}, {"gruesome", -2.3}, {"grungy", -1.3, 0},
    {"haphazard", -1.4}, {"hapless", -1.5}, {"harrowing", -2.2, 0},
    {"hateful", -2.6, LY | NESS}, {"haughty", -1.6, 0}, {"hazardous", -1.9},
    {"heartless", -2.4, LY | NESS}, {"heinous", -2.6}, {"hellish", -2.4},
    {"horrid", -2.7, LY}, {"humiliated", -2.3, 0}, {"icky", -1.5, 0},
    {"ignorant", -1.9, LY}, {"illegal", -2.0, LY}, {"illegible", -1.2},
    {"illogical", -1.3}, {"immoral", -2.1}, {"impatient", -1.4, LY},
    {"imperfect", -1.1, LY}, {"impersonal", -1.1}, {"impractical", -1.2},
    {"imprecise", -1.1}, {"improper", -1.4}, {"imprudent", -1.4},
    {"inattentive", -1.5}, {"inept", -2.0, LY | NESS}, {"inexcusable", -2.3},
    {"infamous", -1.8, LY}, {"infested", -1.9, 0}, {"inflexible", -1.2},
    {"infuriated", -2.7, 0}, {"inhospitable", -1.7}, {"inhumane", -2.3},
    {"insolent", -1.9}, {"insincere", -1.8}, {"intimidating", -1.6, 0},
    {"intrusive", -1.5}, {"invalid", -1.3, 0}, {"irksome", -1.6},
    {"irrational", -1.5}, {"irresponsible", -1.9}, {"irritable", -1.6},
    {"jarring", -1.3, 0}, {"joyless", -1.9, LY | NESS}, {"lackluster", -1.5, 0},
    {"lamentable", -1.9}, {"lethargic", -1.4}, {"listless", -1.4, LY | NESS},
    {"ludicrous", -1.8}, {"malevolent", -2.3}, {"malignant", -2.2},
    {"manipulative", -2.0}, {"meager", -1.3, LY | NESS}, {"menacing", -2.0, LY},
    {"merciless", -2.2, LY | NESS}, {"mindless", -1.6, LY | NESS}, {"miserly", -1.6, 0},
    {"misguided", -1.4, 0}, {"mismanaged", -1.7, 0}, {"monotonous", -1.3, LY},
    {"morbid", -1.7}, {"moronic", -2.3}, {"muddled", -1.3, 0}, {"murky", -1.1, 0},
    {"naive", -1.0, LY}, {"nauseating", -2.2, LY}, {"needless", -1.2, LY},
    {"nefarious", -2.2}, {"nonsensical", -1.5}, {"noxious", -1.9},
    {"objectionable", -1.6}, {"obscene", -2.2}, {"obsolete", -1.4},
    {"obstinate", -1.4}, {"obstructive", -1.5}, {"ominous", -1.8, LY},
    {"oppressive", -2.0}, {"outdated", -1.2, 0}, {"overbearing", -1.6, 0},
    {"overdue", -1.2, 0}, {"paltry", -1.4}, {"panicked", -1.9, 0},
    {"paranoid", -1.5}, {"perplexing", -1.2, LY}, {"pessimistic", -1.6},
    {"pitiless", -2.1}, {"precarious", -1.4}, {"preposterous", -1.8},
    {"pretentious", -1.6}, {"problematic", -1.5}, {"prohibitive", -1.3},
    {"punishing", -1.7, 0}, {"puny", -1.3, 0}, {"questionable", -1.3},
    {"rancid", -2.0}, {"rash", -1.2, LY | NESS}, {"ratty", -1.4, 0},
    {"reckless", -1.9, LY | NESS}, {"remorseless", -2.1, LY}, {"repellent", -2.0},
    {"reprehensible", -2.3}, {"repugnant", -2.4}, {"resentful", -1.9, LY},
    {"restrictive", -1.2}, {"rickety", -1.3, 0}, {"rusty", -1.0, 0},
    {"ruthless", -2.1, LY | NESS}, {"scant", -1.1, LY}, {"scathing", -1.9, LY},
    {"scornful", -1.9, LY}, {"seedy", -1.4, 0}, {"senseless", -1.7, LY | NESS},
    {"shabby", -1.6, 0}, {"shaky", -1.2, 0}, {"shallow", -1.2, LY | NESS},
    {"shameless", -1.9, LY | NESS}, {"shocking", -1.7, LY}, {"shortsighted", -1.4, 0},
    {"sickening", -2.3, LY}, {"sinister", -2.0, LY}, {"sleazy", -1.9, 0},
    {"smug", -1.5, LY | NESS}, {"snide", -1.6, LY}, {"spiteful", -2.0, LY | NESS},
    {"spotty", -1.1, 0}, {"squalid", -1.9}, {"stifling", -1.5, 0},
    {"stingy", -1.5, 0}, {"strained", -1.2, 0}, {"substandard", -1.7, 0},
    {"tainted", -1.6, 0}, {"tardy", -1.3, 0}, {"tasteless", -1.5, LY | NESS},
    {"tattered", -1.4, 0}, {"temperamental", -1.3}, {"threatening", -2.0, LY},
    {"torturous", -2.3}, {"tragic", -2.4}, {"treacherous", -2.2},
    {"troublesome", -1.7}, {"turbulent", -1.4}, {"unappealing", -1.5, 0},
    {"unapproachable", -1.4}, {"uncaring", -1.9, 0}, {"uncooperative", -1.7, 0},
    {"uncouth", -1.7}, {"underhanded", -1.9, 0}, {"underwhelming", -1.5, 0},
    {"undesirable", -1.5}, {"undignified", -1.6}, {"unethical", -2.0},
    {"uneven", -1.0, LY | NESS}, {"unforgivable", -2.4, LY}, {"unfriendly", -1.9, 0},
    {"unimpressive", -1.4}, {"uninspired", -1.3, 0}, {"unintuitive", -1.3, 0},
    {"unjustified", -1.6, 0}, {"unkind", -1.9, LY | NESS}, {"unmanageable", -1.6},
    {"unnerving", -1.6, LY}, {"unpredictable", -1.2}, {"unreasonable", -1.7},
    {"unremarkable", -1.1}, {"unsavory", -1.7}, {"unscrupulous", -2.1},
    {"unsettling", -1.6, LY}, {"unsightly", -1.5}, {"unsound", -1.3},
    {"unsupportive", -1.6}, {"untimely", -1.3, 0}, {"untrustworthy", -2.2},
    {"unwanted", -1.5, 0}, {"unwelcome", -1.6, 0}, {"unwieldy", -1.3},
    {"unwilling", -1.2, LY | NESS}, {"vague", -1.0, LY | NESS}, {"vapid", -1.3},
    {"vexing", -1.6, 0}, {"vicious", -2.3, LY | NESS}, {"vindictive", -2.1},
    {"volatile", -1.3}, {"weary", -1.4, 0}, {"woeful", -2.0},
    {"wobbly", -1.1, 0}, {"wretched", -2.4, LY | NESS},
};

const std::vector<Verb> kVerbs2 = {
    {"applaud", 2.0}, {"affirm", 1.3}, {"amuse", 1.7}, {"assure", 1.4},
    {"attain", 1.4}, {"befriend", 1.7}, {"bolster", 1.3}, {"boost", 1.4},
    {"captivate", 1.9}, {"collaborate", 1.3}, {"commend", 1.9}, {"console", 1.5},
    {"cooperate", 1.3}, {"cure", 1.8}, {"dazzle", 2.0}, {"dedicate", 1.4},
    {"defend", 1.2}, {"elevate", 1.4}, {"enchant", 2.0}, {"endear", 1.7},
    {"energize", 1.6}, {"enlighten", 1.7}, {"enliven", 1.6}, {"enrich", 1.6},
    {"entertain", 1.7}, {"excel", 2.0, true}, {"exhilarate", 2.2}, {"facilitate", 1.1},
    {"fascinate", 1.8}, {"flatter", 1.5}, {"fulfill", 1.7}, {"gladden", 1.9},
    {"glorify", 1.7}, {"gratify", 1.8}, {"harmonize", 1.4}, {"hearten", 1.7},
    {"hug", 1.9, true}, {"illuminate", 1.4}, {"innovate", 1.4}, {"invigorate", 1.7},
    {"laud", 1.9}, {"lift", 1.2}, {"mesmerize", 1.8}, {"nurture", 1.7},
    {"optimize", 1.2}, {"pamper", 1.6}, {"pardon", 1.3}, {"persevere", 1.5},
    {"prevail", 1.6}, {"promote", 1.2}, {"reconcile", 1.3}, {"refine", 1.2},
    {"refresh", 1.4}, {"rejoice", 2.2}, {"rejuvenate", 1.8}, {"revitalize", 1.7},
    {"revive", 1.4}, {"salute", 1.6}, {"stabilize", 1.1}, {"strengthen", 1.4},
    {"surpass", 1.5}, {"unify", 1.3}, {"unite", 1.4}, {"upgrade", 1.3},
    {"validate", 1.1}, {"vouch", 1.3},
    // negative
    {"afflict", -1.9}, {"alienate", -1.8}, {"antagonize", -1.9}, {"appall", -2.3},
    {"bash", -1.7}, {"belittle", -2.0}, {"berate", -2.0}, {"bicker", -1.5},
    {"boycott", -1.6}, {"bully", -2.4}, {"chastise", -1.8}, {"cheapen", -1.4},
    {"choke", -1.6}, {"condescend", -1.8}, {"confound", -1.3}, {"cripple", -2.0},
    {"crumble", -1.5}, {"crush", -2.0}, {"decay", -1.6}, {"defame", -2.1},
    {"degenerate", -1.7}, {"demean", -2.0}, {"demolish", -1.8}, {"demote", -1.5},
    {"denounce", -1.9}, {"deplete", -1.4}, {"deplore", -2.0}, {"depress", -2.1},
    {"deride", -1.9}, {"deter", -1.2}, {"devalue", -1.4}, {"disapprove", -1.6},
    {"disconcert", -1.4}, {"discredit", -1.7}, {"dishearten", -1.9},
    {"dislike", -1.7}, {"dismay", -1.8}, {"disown", -1.9}, {"disparage", -1.9},
    {"distort", -1.4}, {"dump", -1.4}, {"embarrass", -1.9}, {"endanger", -1.9},
    {"erode", -1.3}, {"exacerbate", -1.6}, {"exclude", -1.3}, {"exhaust", -1.6},
    {"falsify", -1.9}, {"forfeit", -1.5}, {"forsake", -1.9}, {"frighten", -2.0},
    {"fumble", -1.3}, {"grumble", -1.5}, {"hamper", -1.4}, {"hinder", -1.4},
    {"humiliate", -2.4}, {"impair", -1.5}, {"impede", -1.4}, {"incense", -2.2},
    {"inflame", -1.6}, {"inhibit", -1.2}, {"jeopardize", -1.9}, {"lament", -1.8},
    {"malign", -1.9}, {"mangle", -1.8}, {"mishandle", -1.7}, {"mismanage", -1.7},
    {"misjudge", -1.4}, {"misplace", -1.2}, {"nag", -1.5, true}, {"oppress", -2.1},
    {"ostracize", -1.9}, {"overwhelm", -1.5}, {"pester", -1.6}, {"plague", -1.9},
    {"pollute", -1.8}, {"provoke", -1.5}, {"rant", -1.4}, {"ravage", -2.1},
    {"rebuke", -1.7}, {"recoil", -1.4}, {"reprimand", -1.6}, {"repulse", -2.1},
    {"scold", -1.7}, {"scorn", -1.9}, {"shun", -1.7, true}, {"slander", -2.1},
    {"smear", -1.6}, {"snub", -1.7, true}, {"squander", -1.8}, {"strand", -1.5},
    {"taint", -1.6}, {"tamper", -1.5}, {"tarnish", -1.6}, {"taunt", -1.9},
    {"terrify", -2.5}, {"torment", -2.3}, {"trample", -1.7}, {"trick", -1.7},
    {"undermine", -1.6}, {"vandalize", -2.1}, {"vex", -1.6}, {"victimize", -2.2},
    {"vilify", -2.1}, {"violate", -2.1}, {"wail", -1.7}, {"wane", -1.1},
    {"whimper", -1.5}, {"wither", -1.4},
};

const std::vector<Noun> kNouns2 = {
    {"accolade", 2.0}, {"admiration", 2.1}, {"affection", 2.1}, {"amusement", 1.7},
    {"applause", 2.0}, {"awe", 1.8}, {"bargain", 1.5}, {"breakthrough", 1.9},
    {"celebration", 2.2}, {"commendation", 1.9}, {"courage", 1.9}, {"dedication", 1.7},
    {"diligence", 1.6}, {"distinction", 1.5}, {"eagerness", 1.5}, {"ecstasy", 2.8},
    {"elation", 2.6}, {"elegance", 2.0}, {"encouragement", 1.8}, {"endorsement", 1.4},
    {"enjoyment", 2.1}, {"enlightenment", 1.7}, {"euphoria", 2.8}, {"fascination", 1.6},
    {"festivity", 1.9}, {"flair", 1.5}, {"fondness", 1.8}, {"glee", 2.3},
    {"goodwill", 1.9}, {"gratification", 1.9}, {"haven", 1.7}, {"healing", 1.6},
    {"helpfulness", 1.9}, {"hospitality", 1.8}, {"humor", 1.5}, {"innovation", 1.4},
    {"inspiration", 2.0}, {"jubilation", 2.5}, {"kudos", 2.0}, {"liberation", 1.8},
    {"marvel", 2.1}, {"mastery", 1.8}, {"merriment", 2.1}, {"milestone", 1.4},
    {"ovation", 2.1}, {"perk", 1.4}, {"pinnacle", 1.8}, {"privilege", 1.5},
    {"prowess", 1.7}, {"radiance", 1.9}, {"rapport", 1.6}, {"rapture", 2.4},
    {"renewal", 1.3}, {"resilience", 1.6}, {"reverence", 1.6}, {"salvation", 1.9},
    {"serenity", 2.0}, {"splendor", 2.3}, {"sunshine", 1.9}, {"tact", 1.4},
    {"talent", 1.7}, {"tenderness", 1.9}, {"thankfulness", 2.1}, {"tribute", 1.6},
    {"valor", 1.9}, {"vigor", 1.5}, {"vitality", 1.6}, {"wellbeing", 1.7},
    {"wellness", 1.6}, {"zeal", 1.5}, {"zest", 1.6},
    // negative
    {"accident", -1.6}, {"accusation", -1.6}, {"adversity", -1.5}, {"affliction", -1.9},
    {"aggravation", -1.9}, {"aggression", -1.9}, {"ailment", -1.5}, {"angst", -1.6},
    {"animosity", -1.9}, {"antagonism", -1.8}, {"apathy", -1.4}, {"backlash", -1.5},
    {"bankruptcy", -2.2}, {"betrayal", -2.5}, {"bitterness", -1.8}, {"blunder", -1.7},
    {"bottleneck", -1.2}, {"breakage", -1.5}, {"brutality", -2.4}, {"calamity", -2.4},
    {"cancellation", -1.4}, {"carelessness", -1.7}, {"clutter", -1.2}, {"commotion", -1.2},
    {"complication", -1.4}, {"condemnation", -1.8}, {"contempt", -2.0},
    {"contention", -1.3}, {"controversy", -1.3}, {"corrosion", -1.4}, {"cruelty", -2.5},
    {"cynicism", -1.4}, {"deadlock", -1.4}, {"debacle", -2.1}, {"deceit", -2.2},
    {"deception", -2.1}, {"defeat", -1.9}, {"deficiency", -1.4}, {"deficit", -1.3},
    {"degradation", -1.8}, {"dejection", -1.9}, {"demise", -1.9}, {"denial", -1.4},
    {"depression", -2.3}, {"deprivation", -1.8}, {"derision", -1.8}, {"desolation", -2.1},
    {"desperation", -1.9}, {"destruction", -2.3}, {"detriment", -1.5},
    {"disadvantage", -1.3}, {"disagreement", -1.2}, {"disappointment", -2.1},
    {"disapproval", -1.5}, {"disarray", -1.5}, {"disbelief", -1.2}, {"discomfort", -1.5},
    {"discord", -1.5}, {"disdain", -1.8}, {"disease", -1.9}, {"dishonesty", -2.2},
    {"disillusionment", -1.7}, {"dismay", -1.8}, {"disorder", -1.5}, {"displeasure", -1.8},
    {"disrepair", -1.6}, {"disrespect", -2.0}, {"disruption", -1.5},
    {"dissatisfaction", -2.1}, {"distrust", -1.8}, {"disturbance", -1.4},
    {"downfall", -1.8}, {"downturn", -1.4}, {"drawback", -1.2}, {"drudgery", -1.5},
    {"dysfunction", -1.7}, {"eyesore", -1.5}, {"fatigue", -1.4}, {"feud", -1.6},
    {"fiasco", -2.0}, {"filth", -2.0}, {"flop", -1.6}, {"folly", -1.4},
    {"forgery", -1.9}, {"frailty", -1.2}, {"futility", -1.7}, {"gloom", -1.8},
    {"grudge", -1.6}, {"guilt", -1.7}, {"harassment", -2.4}, {"havoc", -1.9},
    {"hazard", -1.7}, {"heartache", -2.2}, {"heartbreak", -2.4}, {"hostility", -2.0},
    {"humiliation", -2.3}, {"hypocrisy", -1.9}, {"ignorance", -1.7}, {"impatience", -1.3},
    {"imperfection", -1.1}, {"inability", -1.3}, {"inaccuracy", -1.3},
    {"incompetence", -2.2}, {"inconsistency", -1.2}, {"indifference", -1.3},
    {"inefficiency", -1.4}, {"inferiority", -1.5}, {"injustice", -2.1},
    {"insecurity", -1.5}, {"instability", -1.4}, {"interruption", -1.2},
    {"intimidation", -1.9}, {"irritant", -1.5}, {"jeopardy", -1.7}, {"lawsuit", -1.6},
    {"laziness", -1.6}, {"letdown", -1.8}, {"limbo", -1.2}, {"malice", -2.2},
    {"malpractice", -2.1}, {"mayhem", -1.9}, {"miscommunication", -1.4},
    {"misconduct", -1.9}, {"mishap", -1.4}, {"misinformation", -1.7},
    {"mistrust", -1.7}, {"misunderstanding", -1.3}, {"monotony", -1.2},
    {"negligence", -2.0}, {"nonsense", -1.6}, {"nuisance", -1.6}, {"obstruction", -1.4},
    {"oppression", -2.1}, {"outcry", -1.5}, {"outrage", -2.2}, {"oversight", -1.2},
    {"peril", -1.8}, {"pessimism", -1.5}, {"pest", -1.5}, {"pity", -1.3},
    {"poison", -2.1}, {"poverty", -2.0}, {"predicament", -1.4}, {"prejudice", -1.9},
    {"recession", -1.7}, {"recklessness", -1.8}, {"regression", -1.3},
    {"rejection", -1.8}, {"remorse", -1.6}, {"resentment", -1.8}, {"retaliation", -1.8},
    {"rift", -1.3}, {"rudeness", -1.9}, {"sarcasm", -1.2}, {"scarcity", -1.3},
    {"shortage", -1.3}, {"shortcoming", -1.2}, {"slump", -1.4}, {"sneer", -1.6},
    {"spite", -1.8}, {"squabble", -1.4}, {"stalemate", -1.2}, {"standstill", -1.2},
    {"strain", -1.2}, {"stupidity", -2.0}, {"suffering", -2.3}, {"suspicion", -1.4},
    {"tantrum", -1.6}, {"tardiness", -1.3}, {"tedium", -1.2}, {"temper", -1.2},
    {"toil", -1.2}, {"turmoil", -1.8}, {"uncertainty", -1.2}, {"undoing", -1.4},
    {"unease", -1.3}, {"unfairness", -1.9}, {"unrest", -1.5}, {"upheaval", -1.5},
    {"uproar", -1.4}, {"vandalism", -2.0}, {"vengeance", -1.9}, {"villain", -2.0},
    {"violence", -2.4}, {"woe", -1.9}, {"wrath", -2.2}, {"wrongdoing", -1.9},
};

const std::vector<Fixed> kFixed2 = {
    {"misunderstood", -1.5}, {"overblown", -1.5}, {"overhyped", -1.7},
    {"overrated", -1.5}, {"underrated", 1.0}, {"standout", 2.0}, {"heartfelt", 2.2},
    {"hardworking", 1.9}, {"well", 1.1}, {"tysm", 2.0}, {"thankyou", 1.9},
    {"np", 1.0}, {"wth", -1.9}, {"pfft", -1.1}, {"boo", -1.7},
    {"uncool", -1.5}, {"unloved", -2.1}, {"unwell", -1.4}, {"mediocrity", -1.5},
    {"substandardly", -1.7}, {"amazes", 2.4}, {"amazed", 2.4},
    {"overcame", 1.6}, {"overcome", 1.3}, {"undone", -1.3}, {"undid", -1.1},
    {"withdrew", -0.9}, {"shone", 1.6}, {"upheld", 1.2}, {"outdid", 1.4},
    {"mistook", -1.2}, {"misunderstand", -1.3}, {"misunderstands", -1.3},
    {"misunderstanding", -1.3}, {"overreacted", -1.4}, {"overreacting", -1.4},
    {"overreact", -1.4}, {"underdelivered", -1.7}, {"overpromised", -1.6},
};

// --- negators and boosters -----------------------------------------------------

const std::vector<std::string> kNegators = {
    "aint", "ain't", "arent", "aren't", "cannot", "cant", "can't", "couldnt", "couldn't",
    "darent", "daren't", "didnt", "didn't", "doesnt", "doesn't", "dont", "don't",
    "hadnt", "hadn't", "hasnt", "hasn't", "havent", "haven't", "isnt", "isn't",
    "mightnt", "mightn't", "mustnt", "mustn't", "neednt", "needn't", "neither",
    "never", "no", "nobody", "none", "nope", "nor", "not", "nothing", "nowhere",
    "oughtnt", "oughtn't", "shant", "shan't", "shouldnt", "shouldn't", "uhuh",
    "wasnt", "wasn't", "werent", "weren't", "without", "wont", "won't",
    "wouldnt", "wouldn't", "rarely", "seldom", "despite",
};

const std::vector<std::pair<std::string, double>> kBoosters = {
    {"very", 0.293}, {"really", 0.293}, {"extremely", 0.34}, {"absolutely", 0.34},
    {"completely", 0.293}, {"totally", 0.293}, {"so", 0.293}, {"incredibly", 0.34},
    {"insanely", 0.34}, {"super", 0.293}, {"quite", 0.2}, {"particularly", 0.2},
    {"especially", 0.25}, {"highly", 0.25}, {"utterly", 0.34}, {"deeply", 0.25},
    {"enormously", 0.3}, {"entirely", 0.25}, {"remarkably", 0.25}, {"exceptionally", 0.34},
    {"amazingly", 0.3}, {"decidedly", 0.2}, {"unbelievably", 0.34}, {"unusually", 0.2},
    {"purely", 0.15}, {"fully", 0.2}, {"majorly", 0.3}, {"hugely", 0.3},
    {"tremendously", 0.34}, {"intensely", 0.3}, {"thoroughly", 0.25}, {"uber", 0.293},
    {"hella", 0.3},
    {"hardly", -0.293}, {"barely", -0.293}, {"scarcely", -0.293}, {"slightly", -0.293},
    {"somewhat", -0.2}, {"kinda", -0.293}, {"sorta", -0.293}, {"marginally", -0.25},
    {"occasionally", -0.2}, {"partly", -0.25}, {"almost", -0.25}, {"merely", -0.2},
    {"less", -0.25}, {"little", -0.25}, {"mildly", -0.2}, {"moderately", -0.15},
};

// emoticons must match the tokenizer's fixed table verbatim
const std::vector<Fixed> kEmoticons = {
    {":-)", 2.1}, {":)", 2.0}, {":-(", -2.1}, {":(", -2.0}, {":-D", 2.7},
    {":D", 2.6}, {":-P", 1.4}, {":P", 1.4}, {":-/", -1.3}, {":/", -1.3},
    {";-)", 1.7}, {";)", 1.6}, {":'(", -2.6}, {":|", -0.8}, {":O", 0.6},
    {"=)", 1.9}, {"=(", -2.0}, {"<3", 2.8}, {"</3", -2.7}, {"^_^", 2.2},
    {"-_-", -1.4}, {"T_T", -2.3}, {"D:", -2.2}, {"XD", 2.3}, {"xD", 2.3},
};

bool ends_with(const std::string& s, const char* suffix) {
    const std::string suf(suffix);
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::string adverb_of(const std::string& adj) {
    if (ends_with(adj, "ly")) return ""; // already an adverb
    if (ends_with(adj, "le")) return adj.substr(0, adj.size() - 1) + "y";
    if (ends_with(adj, "ic")) return adj + "ally";
    if (adj.size() > 2 && adj.back() == 'y' && !is_vowel(adj[adj.size() - 2]))
        return adj.substr(0, adj.size() - 1) + "ily";
    if (ends_with(adj, "ll")) return adj + "y";
    return adj + "ly";
}

std::string noun_of(const std::string& adj) {
    if (adj.size() > 2 && adj.back() == 'y' && !is_vowel(adj[adj.size() - 2]))
        return adj.substr(0, adj.size() - 1) + "iness";
    return adj + "ness";
}

std::string plural_of(const std::string& noun) {
    if (ends_with(noun, "s") || ends_with(noun, "x") || ends_with(noun, "z") ||
        ends_with(noun, "ch") || ends_with(noun, "sh"))
        return noun + "es";
    if (noun.size() > 2 && noun.back() == 'y' && !is_vowel(noun[noun.size() - 2]))
        return noun.substr(0, noun.size() - 1) + "ies";
    return noun + "s";
}

std::string s_form(const std::string& verb) { return plural_of(verb); }

std::string ed_form(const std::string& verb, bool dbl) {
    if (verb.back() == 'e') return verb + "d";
    if (verb.size() > 2 && verb.back() == 'y' && !is_vowel(verb[verb.size() - 2]))
        return verb.substr(0, verb.size() - 1) + "ied";
    if (dbl) return verb + verb.back() + "ed";
    return verb + "ed";
}

std::string ing_form(const std::string& verb, bool dbl) {
    if (ends_with(verb, "ie")) return verb.substr(0, verb.size() - 2) + "ying";
    if (verb.back() == 'e' && !ends_with(verb, "ee")) return verb.substr(0, verb.size() - 1) + "ing";
    if (dbl) return verb + verb.back() + "ing";
    return verb + "ing";
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: lexgen <output.tsv>\n";
        return 2;
    }

    std::map<std::string, double> entries; // sorted, first insertion wins
    auto add = [&entries](const std::string& w, double v) {
        if (w.empty() || v == 0.0) return;
        entries.emplace(w, v);
    };

    for (const auto* adjs : {&kAdjectives, &kAdjectives2}) {
        for (const Adj& a : *adjs) {
            const std::string w(a.w);
            add(w, a.v);
            if (a.flags & LY) add(adverb_of(w), a.v);
            if (a.flags & NESS) add(noun_of(w), a.v * 0.9);
            if (a.flags & EREST) {
                // regular comparatives only; irregulars live in kFixed
                std::string stem = w;
                if (stem.back() == 'e') stem.pop_back();
                else if (stem.size() > 2 && stem.back() == 'y' &&
                         !is_vowel(stem[stem.size() - 2]))
                    stem = stem.substr(0, stem.size() - 1) + "i";
                add(stem + "er", a.v * 1.05);
                add(stem + "est", a.v * 1.15);
            }
            if (a.flags & UN) add("un" + w, -0.75 * a.v);
        }
    }
    for (const auto* verbs : {&kVerbs, &kVerbs2}) {
        for (const Verb& v : *verbs) {
            const std::string w(v.w);
            add(w, v.v);
            add(s_form(w), v.v);
            if (!v.no_ed) add(ed_form(w, v.dbl), v.v);
            add(ing_form(w, v.dbl), v.v);
        }
    }
    for (const auto* nouns : {&kNouns, &kNouns2}) {
        for (const Noun& n : *nouns) {
            add(n.w, n.v);
            add(plural_of(n.w), n.v);
        }
    }
    for (const Fixed& f : kFixed) add(f.w, f.v);
    for (const Fixed& f : kFixed2) add(f.w, f.v);
    for (const Fixed& e : kEmoticons) add(e.w, e.v);

    std::set<std::string> negators(kNegators.begin(), kNegators.end());
    std::map<std::string, double> boosters;
    for (const auto& [w, d] : kBoosters) {
        if (d == 0.0) continue;
        if (!negators.count(w)) boosters.emplace(w, d);
    }
    // modifier tokens may not double as entries
    for (const auto& w : negators) entries.erase(w);
    for (const auto& [w, d] : boosters) entries.erase(w);

    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
        std::cerr << "lexgen: cannot open " << argv[1] << "\n";
        return 2;
    }
    out << "#name=chatmine-default #version=1.0\n";
    out << "#section=entries\n";
    char buf[32];
    for (const auto& [w, v] : entries) {
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        out << w << '\t' << buf << '\n';
    }
    out << "#section=negators\n";
    for (const auto& w : negators) out << w << '\n';
    out << "#section=boosters\n";
    for (const auto& [w, d] : boosters) {
        std::snprintf(buf, sizeof(buf), "%.4g", d);
        out << w << '\t' << buf << '\n';
    }

    std::cout << "entries: " << entries.size() << "  negators: " << negators.size()
              << "  boosters: " << boosters.size() << "\n";
    return 0;
}
