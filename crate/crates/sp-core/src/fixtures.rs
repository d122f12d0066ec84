//! Demonstration grammars shared by tests, the CLI docs, and the
//! simulator's end-to-end feature pipeline.

use std::collections::BTreeSet;

use crate::pattern::{Pattern, PatternId};
use crate::store::OldStore;
use crate::symbol::{parse_symbols, Symbol};

/// Word-and-rule grammar for the plural sentence `t w o k i t t e n s
/// p l a y`: word patterns with grammatical markers, the rules that knit
/// them into phrases, and a couple of distractor words the sentence never
/// touches.
pub fn kitten_grammar() -> OldStore {
    OldStore::from_patterns(vec![
        Pattern::old("two", "D Dp 4 t w o #D", 300).unwrap(),
        Pattern::old("kitten", "N Nr 5 k i t t e n #N", 200).unwrap(),
        Pattern::old("noun-plural", "N Np N Nr #N s #N", 350).unwrap(),
        Pattern::old("play", "V Vp 11 p l a y #V", 250).unwrap(),
        Pattern::old("noun-phrase", "NP D Dp #D N Np #N #NP", 400).unwrap(),
        Pattern::old("sentence", "S Num ; NP #NP V #V #S", 500).unwrap(),
        Pattern::old("number-agreement", "Num PL ; Np Vp #Num", 150).unwrap(),
        Pattern::old("grub", "N Nr 6 g r u b #N", 100).unwrap(),
        Pattern::old("hum", "V Vp 12 h u m #V", 100).unwrap(),
    ])
    .unwrap()
}

pub fn kitten_sentence() -> Pattern {
    Pattern::incoming("sentence-in", "t w o k i t t e n s p l a y").unwrap()
}

/// The same grammar as `.sp` file text (ids become `p1`..`p9` on parse).
pub const KITTEN_GRAMMAR_SP: &str = "\
# plural-sentence grammar
D Dp 4 t w o #D *300
N Nr 5 k i t t e n #N *200
N Np N Nr #N s #N *350
V Vp 11 p l a y #V *250
NP D Dp #D N Np #N #NP *400
S Num ; NP #NP V #V #S *500
Num PL ; Np Vp #Num *150
N Nr 6 g r u b #N *100
V Vp 12 h u m #V *100
";

/// Part/whole grammar for a schematic human figure plus a distractor
/// vehicle class. Low-level feature symbols (`f.*`) are what a front-end
/// feature extractor emits; the part patterns group them and the root
/// patterns reference the parts through `X #X` slots.
pub fn human_grammar() -> OldStore {
    OldStore::from_patterns(vec![
        Pattern::old("head", "head f.crown f.eye f.eye f.nose f.mouth #head", 50).unwrap(),
        Pattern::old("torso", "torso f.neck f.chest f.belly #torso", 50).unwrap(),
        Pattern::old("larm", "larm f.lshoulder f.lelbow f.lhand #larm", 50).unwrap(),
        Pattern::old("rarm", "rarm f.rshoulder f.relbow f.rhand #rarm", 50).unwrap(),
        Pattern::old("belt", "belt f.belt #belt", 50).unwrap(),
        Pattern::old("lleg", "lleg f.lhip f.lknee f.lfoot #lleg", 50).unwrap(),
        Pattern::old("rleg", "rleg f.rhip f.rknee f.rfoot #rleg", 50).unwrap(),
        Pattern::old(
            "body",
            "body head #head torso #torso larm #larm rarm #rarm belt #belt lleg #lleg rleg #rleg",
            50,
        )
        .unwrap(),
        Pattern::old("wheels", "wheels c.wheel c.wheel #wheels", 50).unwrap(),
        Pattern::old("cabin", "cabin c.door c.roof c.window #cabin", 50).unwrap(),
        Pattern::old("car", "car wheels #wheels cabin #cabin", 50).unwrap(),
    ])
    .unwrap()
}

/// Feature stream for the full human figure, in scan order (top of the
/// frame first).
pub fn human_stream() -> Vec<Symbol> {
    parse_symbols(
        "f.crown f.eye f.eye f.nose f.mouth \
         f.neck f.lshoulder f.rshoulder f.chest f.lelbow f.relbow f.belly \
         f.lhand f.rhand f.belt f.lhip f.rhip f.lknee f.rknee f.lfoot f.rfoot",
    )
    .unwrap()
}

pub fn human_roots() -> BTreeSet<PatternId> {
    BTreeSet::from([PatternId::new("body"), PatternId::new("car")])
}
