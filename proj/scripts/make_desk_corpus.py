#!/usr/bin/env python3
"""Generate the desk fixtures in data/desk/.

Writes a grammar-generated Italian treebank in CoNLL-U (train and test
splits, UPOS and lemma columns filled, multiword tokens for articulated
prepositions and enclitic infinitives) and a full-form lexicon in the
Morph-it TSV layout (form, lemma, tag) covering every inflected form of
the vocabulary, including forms that never occur in the corpus.

Some open-class lemmas only occur in the test split, so the tagger sees
unknown words there while the lexicon still knows them.

Usage: make_desk_corpus.py [--out data/desk] [--seed 7]
"""

import argparse
import random
from pathlib import Path

VOWELS = "aeiouàèéìòù"


def lo_class(word):
    w = word.lower()
    return (
        (w[0] == "s" and len(w) > 1 and w[1] not in VOWELS)
        or w[0] in "zxy"
        or w.startswith(("gn", "ps", "pn"))
    )


def starts_vowel(word):
    return word[0].lower() in VOWELS or word[0].lower() == "h"


# ---------------------------------------------------------------------------
# vocabulary

# (singular, plural, gender)
NOUNS = [
    ("libro", "libri", "m"), ("gatto", "gatti", "m"), ("ragazzo", "ragazzi", "m"),
    ("tavolo", "tavoli", "m"), ("giorno", "giorni", "m"), ("anno", "anni", "m"),
    ("treno", "treni", "m"), ("medico", "medici", "m"), ("amico", "amici", "m"),
    ("vino", "vini", "m"), ("pane", "pani", "m"), ("cane", "cani", "m"),
    ("fiore", "fiori", "m"), ("mare", "mari", "m"), ("padre", "padri", "m"),
    ("signore", "signori", "m"), ("giornale", "giornali", "m"), ("ospedale", "ospedali", "m"),
    ("paese", "paesi", "m"), ("bambino", "bambini", "m"), ("lavoro", "lavori", "m"),
    ("progetto", "progetti", "m"), ("mercato", "mercati", "m"), ("museo", "musei", "m"),
    ("albero", "alberi", "m"), ("studente", "studenti", "m"), ("professore", "professori", "m"),
    ("dottore", "dottori", "m"), ("cielo", "cieli", "m"), ("fiume", "fiumi", "m"),
    ("ponte", "ponti", "m"), ("porto", "porti", "m"), ("stato", "stati", "m"),
    ("piano", "piani", "m"), ("tempo", "tempi", "m"), ("mondo", "mondi", "m"),
    ("governo", "governi", "m"), ("sindaco", "sindaci", "m"), ("vestito", "vestiti", "m"),
    ("teatro", "teatri", "m"), ("film", "film", "m"), ("computer", "computer", "m"),
    ("sport", "sport", "m"), ("caffè", "caffè", "m"), ("latte", "latti", "m"),
    ("arto", "arti", "m"), ("collo", "colli", "m"), ("colle", "colli", "m"),
    ("uomo", "uomini", "m"), ("problema", "problemi", "m"), ("tema", "temi", "m"),
    ("sistema", "sistemi", "m"), ("zaino", "zaini", "m"), ("specchio", "specchi", "m"),
    ("orologio", "orologi", "m"), ("negozio", "negozi", "m"), ("ufficio", "uffici", "m"),
    ("campo", "campi", "m"), ("gioco", "giochi", "m"), ("lago", "laghi", "m"),
    ("parco", "parchi", "m"), ("prezzo", "prezzi", "m"), ("viaggio", "viaggi", "m"),
    ("bicchiere", "bicchieri", "m"), ("cuoco", "cuochi", "m"), ("contadino", "contadini", "m"),
    ("cavallo", "cavalli", "m"), ("uccello", "uccelli", "m"), ("pesce", "pesci", "m"),
    ("quadro", "quadri", "m"), ("letto", "letti", "m"), ("muro", "muri", "m"),
    ("tetto", "tetti", "m"), ("giardino", "giardini", "m"), ("vicino", "vicini", "m"),
    ("nonno", "nonni", "m"), ("fratello", "fratelli", "m"), ("figlio", "figli", "m"),
    ("zio", "zii", "m"), ("capo", "capi", "m"), ("animale", "animali", "m"),
    ("ristorante", "ristoranti", "m"), ("cameriere", "camerieri", "m"), ("autobus", "autobus", "m"),
    ("dialogo", "dialoghi", "m"), ("racconto", "racconti", "m"), ("romanzo", "romanzi", "m"),
    ("sogno", "sogni", "m"), ("pensiero", "pensieri", "m"), ("consiglio", "consigli", "m"),
    ("esame", "esami", "m"), ("errore", "errori", "m"), ("colore", "colori", "m"),
    ("odore", "odori", "m"), ("rumore", "rumori", "m"), ("sapore", "sapori", "m"),
    ("motore", "motori", "m"), ("attore", "attori", "m"), ("scrittore", "scrittori", "m"),
    ("pittore", "pittori", "m"), ("ombrello", "ombrelli", "m"), ("aereo", "aerei", "m"),
    ("ingegnere", "ingegneri", "m"), ("avvocato", "avvocati", "m"), ("operaio", "operai", "m"),
    ("casa", "case", "f"), ("porta", "porte", "f"), ("città", "città", "f"),
    ("strada", "strade", "f"), ("scuola", "scuole", "f"), ("ragazza", "ragazze", "f"),
    ("madre", "madri", "f"), ("donna", "donne", "f"), ("mela", "mele", "f"),
    ("pesca", "pesche", "f"), ("volta", "volte", "f"), ("parte", "parti", "f"),
    ("fine", "fini", "f"), ("notte", "notti", "f"), ("chiave", "chiavi", "f"),
    ("nave", "navi", "f"), ("luce", "luci", "f"), ("voce", "voci", "f"),
    ("lettera", "lettere", "f"), ("finestra", "finestre", "f"), ("sedia", "sedie", "f"),
    ("tavola", "tavole", "f"), ("acqua", "acque", "f"), ("amica", "amiche", "f"),
    ("isola", "isole", "f"), ("estate", "estati", "f"), ("arte", "arti", "f"),
    ("latta", "latte", "f"), ("ala", "ali", "f"), ("mano", "mani", "f"),
    ("classe", "classi", "f"), ("lingua", "lingue", "f"), ("storia", "storie", "f"),
    ("guerra", "guerre", "f"), ("festa", "feste", "f"), ("piazza", "piazze", "f"),
    ("chiesa", "chiese", "f"), ("montagna", "montagne", "f"), ("collina", "colline", "f"),
    ("spiaggia", "spiagge", "f"), ("camicia", "camicie", "f"), ("gonna", "gonne", "f"),
    ("borsa", "borse", "f"), ("macchina", "macchine", "f"), ("bicicletta", "biciclette", "f"),
    ("stazione", "stazioni", "f"), ("canzone", "canzoni", "f"), ("ragione", "ragioni", "f"),
    ("nazione", "nazioni", "f"), ("regione", "regioni", "f"), ("università", "università", "f"),
    ("verità", "verità", "f"), ("libertà", "libertà", "f"), ("sorella", "sorelle", "f"),
    ("figlia", "figlie", "f"), ("nonna", "nonne", "f"), ("zia", "zie", "f"),
    ("cucina", "cucine", "f"), ("camera", "camere", "f"), ("torta", "torte", "f"),
    ("pizza", "pizze", "f"), ("birra", "birre", "f"), ("cena", "cene", "f"),
    ("colazione", "colazioni", "f"), ("settimana", "settimane", "f"), ("ora", "ore", "f"),
    ("sera", "sere", "f"), ("mattina", "mattine", "f"), ("vita", "vite", "f"),
    ("idea", "idee", "f"), ("famiglia", "famiglie", "f"), ("società", "società", "f"),
    ("azienda", "aziende", "f"), ("banca", "banche", "f"), ("legge", "leggi", "f"),
    ("regola", "regole", "f"), ("risposta", "risposte", "f"), ("domanda", "domande", "f"),
    ("notizia", "notizie", "f"), ("foto", "foto", "f"), ("radio", "radio", "f"),
    ("moto", "moto", "f"), ("scarpa", "scarpe", "f"), ("finestrella", "finestrelle", "f"),
    ("insegnante", "insegnanti", "f"), ("automobile", "automobili", "f"), ("erba", "erbe", "f"),
]

# four-form adjectives: masculine singular lemma and its forms (ms, fs, mp, fp)
def adj4(lemma):
    stem = lemma[:-1]
    mp = stem + ("hi" if stem.endswith(("c", "g")) and lemma not in ("simpatico", "antico", "economico") else "i")
    fp = stem + ("he" if stem.endswith(("c", "g")) else "e")
    if stem.endswith("i"):
        mp = stem
    return (lemma, stem + "a", mp, fp)


ADJ4 = [adj4(a) for a in [
    "nuovo", "vecchio", "piccolo", "alto", "basso", "lungo", "bianco", "nero", "rosso",
    "giallo", "caldo", "freddo", "pieno", "vuoto", "buono", "cattivo", "ricco", "stanco",
    "contento", "bravo", "famoso", "antico", "moderno", "stretto", "largo", "simpatico",
    "lento", "rapido", "primo", "ultimo", "solo", "piano", "pronto", "sicuro", "chiaro",
    "scuro", "vero", "falso", "giusto", "sbagliato", "strano", "tranquillo", "bagnato",
    "asciutto", "rotondo", "morbido", "duro", "caro", "economico", "pulito", "sporco",
]]
ADJ2 = [(a, a[:-1] + "i") for a in [
    "grande", "verde", "felice", "triste", "facile", "difficile", "veloce", "forte",
    "dolce", "importante", "interessante", "elegante", "gentile", "utile", "inutile",
    "semplice", "comune", "naturale", "nazionale", "normale", "speciale", "giovane",
    "direzionale", "internazionale", "regionale", "centrale", "intelligente", "breve",
]]
PRENOMINAL = {"piccolo", "grande", "vecchio", "nuovo", "bravo", "lungo", "breve", "caro", "giovane", "primo", "ultimo"}


def pres_are(stem):
    i_stem = stem[:-1] if stem.endswith("i") else stem
    h = "h" if stem.endswith(("c", "g")) else ""
    return [stem + "o", i_stem + h + "i", stem + "a", i_stem + h + "iamo", stem + "ate", stem + "ano"]


def fut_are(stem):
    if stem.endswith(("ci", "gi")):
        base = stem[:-1] + "er"
    elif stem.endswith(("c", "g")):
        base = stem + "her"
    else:
        base = stem + "er"
    return [base + "ò", base + "ai", base + "à", base + "emo", base + "ete", base + "anno"]


def regular_verb(lemma, part=None, isc=False):
    ending = lemma[-3:]
    stem = lemma[:-3]
    v = {"inf": lemma}
    if ending == "are":
        v["pres"] = pres_are(stem)
        v["impf"] = [stem + s for s in ["avo", "avi", "ava", "avamo", "avate", "avano"]]
        v["fut"] = fut_are(stem)
        v["ger"] = stem + "ando"
        v["part"] = part or stem + "ato"
        i_stem = stem[:-1] if stem.endswith("i") else stem
        h = "h" if stem.endswith(("c", "g")) else ""
        v["sub3s"] = i_stem + h + "i"
        v["impr2s"] = stem + "a"
    else:
        th = "e" if ending == "ere" else "i"
        if isc:
            v["pres"] = [stem + s for s in ["isco", "isci", "isce", "iamo", "ite", "iscono"]]
            v["sub3s"] = stem + "isca"
            v["impr2s"] = stem + "isci"
        else:
            gi = stem.endswith(("sc",)) and lemma == "conoscere"
            v["pres"] = [stem + "o", stem + "i", stem + "e", stem + "iamo", stem + th + "te", stem + "ono"]
            v["sub3s"] = stem + "a"
            v["impr2s"] = stem + "i"
            del gi
        v["impf"] = [stem + th + s for s in ["vo", "vi", "va", "vamo", "vate", "vano"]]
        base = stem + ("er" if ending == "ere" else "ir")
        v["fut"] = [base + s for s in ["ò", "ai", "à", "emo", "ete", "anno"]]
        v["ger"] = stem + "endo"
        v["part"] = part or stem + ("uto" if ending == "ere" else "ito")
    return v


# lemma -> (forms, transitive, auxiliary for the perfect)
VERBS = {}


def add_verb(lemma, trans=True, aux="avere", part=None, isc=False, forms=None):
    VERBS[lemma] = {"forms": forms or regular_verb(lemma, part, isc), "trans": trans, "aux": aux}


for l in ["parlare", "mangiare", "portare", "guardare", "comprare", "lavorare", "studiare", "cantare",
          "trovare", "chiamare", "pensare", "aspettare", "ascoltare", "pagare", "cercare", "giocare",
          "lavare", "preparare", "visitare", "amare", "cucinare", "voltare", "pescare", "ricordare",
          "dimenticare", "incontrare", "salutare", "usare", "provare", "spiegare", "mostrare",
          "raccontare", "presentare", "toccare", "portare", "spostare", "disegnare", "pulire"]:
    if l == "pulire":
        add_verb(l, isc=True)
    else:
        add_verb(l)
for l in ["camminare", "nuotare", "ballare", "viaggiare", "abitare"]:
    add_verb(l, trans=False)
for l in ["arrivare", "entrare", "tornare", "restare", "passare"]:
    add_verb(l, trans=False, aux="essere")
for l, p in [("vedere", "visto"), ("prendere", "preso"), ("credere", None), ("vendere", None),
             ("ricevere", None), ("ripetere", None), ("leggere", "letto"), ("scrivere", "scritto"),
             ("mettere", "messo"), ("chiedere", "chiesto"), ("perdere", "perso"), ("rompere", "rotto"),
             ("chiudere", "chiuso"), ("decidere", "deciso"), ("conoscere", "conosciuto"),
             ("aprire", "aperto"), ("offrire", "offerto"), ("sentire", None), ("seguire", None),
             ("servire", None)]:
    add_verb(l, part=p)
for l in ["finire", "capire", "preferire", "costruire", "spedire", "colpire"]:
    add_verb(l, isc=True)
for l, p in [("dormire", None), ("correre", "corso"), ("vivere", "vissuto"), ("ridere", "riso")]:
    add_verb(l, trans=False, part=p)
for l in ["partire"]:
    add_verb(l, trans=False, aux="essere")

IRREGULAR = {
    "essere": {"inf": "essere", "pres": ["sono", "sei", "è", "siamo", "siete", "sono"],
               "impf": ["ero", "eri", "era", "eravamo", "eravate", "erano"],
               "fut": ["sarò", "sarai", "sarà", "saremo", "sarete", "saranno"],
               "ger": "essendo", "part": "stato", "sub3s": "sia", "impr2s": "sii"},
    "avere": {"inf": "avere", "pres": ["ho", "hai", "ha", "abbiamo", "avete", "hanno"],
              "impf": ["avevo", "avevi", "aveva", "avevamo", "avevate", "avevano"],
              "fut": ["avrò", "avrai", "avrà", "avremo", "avrete", "avranno"],
              "ger": "avendo", "part": "avuto", "sub3s": "abbia", "impr2s": "abbi"},
    "andare": {"inf": "andare", "pres": ["vado", "vai", "va", "andiamo", "andate", "vanno"],
               "impf": ["andavo", "andavi", "andava", "andavamo", "andavate", "andavano"],
               "fut": ["andrò", "andrai", "andrà", "andremo", "andrete", "andranno"],
               "ger": "andando", "part": "andato", "sub3s": "vada", "impr2s": "va'"},
    "fare": {"inf": "fare", "pres": ["faccio", "fai", "fa", "facciamo", "fate", "fanno"],
             "impf": ["facevo", "facevi", "faceva", "facevamo", "facevate", "facevano"],
             "fut": ["farò", "farai", "farà", "faremo", "farete", "faranno"],
             "ger": "facendo", "part": "fatto", "sub3s": "faccia", "impr2s": "fai"},
    "dire": {"inf": "dire", "pres": ["dico", "dici", "dice", "diciamo", "dite", "dicono"],
             "impf": ["dicevo", "dicevi", "diceva", "dicevamo", "dicevate", "dicevano"],
             "fut": ["dirò", "dirai", "dirà", "diremo", "direte", "diranno"],
             "ger": "dicendo", "part": "detto", "sub3s": "dica", "impr2s": "di'"},
    "venire": {"inf": "venire", "pres": ["vengo", "vieni", "viene", "veniamo", "venite", "vengono"],
               "impf": ["venivo", "venivi", "veniva", "venivamo", "venivate", "venivano"],
               "fut": ["verrò", "verrai", "verrà", "verremo", "verrete", "verranno"],
               "ger": "venendo", "part": "venuto", "sub3s": "venga", "impr2s": "vieni"},
    "uscire": {"inf": "uscire", "pres": ["esco", "esci", "esce", "usciamo", "uscite", "escono"],
               "impf": ["uscivo", "uscivi", "usciva", "uscivamo", "uscivate", "uscivano"],
               "fut": ["uscirò", "uscirai", "uscirà", "usciremo", "uscirete", "usciranno"],
               "ger": "uscendo", "part": "uscito", "sub3s": "esca", "impr2s": "esci"},
    "volere": {"inf": "volere", "pres": ["voglio", "vuoi", "vuole", "vogliamo", "volete", "vogliono"],
               "impf": ["volevo", "volevi", "voleva", "volevamo", "volevate", "volevano"],
               "fut": ["vorrò", "vorrai", "vorrà", "vorremo", "vorrete", "vorranno"],
               "ger": "volendo", "part": "voluto", "sub3s": "voglia", "impr2s": "vogli"},
    "potere": {"inf": "potere", "pres": ["posso", "puoi", "può", "possiamo", "potete", "possono"],
               "impf": ["potevo", "potevi", "poteva", "potevamo", "potevate", "potevano"],
               "fut": ["potrò", "potrai", "potrà", "potremo", "potrete", "potranno"],
               "ger": "potendo", "part": "potuto", "sub3s": "possa", "impr2s": None},
    "dovere": {"inf": "dovere", "pres": ["devo", "devi", "deve", "dobbiamo", "dovete", "devono"],
               "impf": ["dovevo", "dovevi", "doveva", "dovevamo", "dovevate", "dovevano"],
               "fut": ["dovrò", "dovrai", "dovrà", "dovremo", "dovrete", "dovranno"],
               "ger": "dovendo", "part": "dovuto", "sub3s": "debba", "impr2s": None},
    "stare": {"inf": "stare", "pres": ["sto", "stai", "sta", "stiamo", "state", "stanno"],
              "impf": ["stavo", "stavi", "stava", "stavamo", "stavate", "stavano"],
              "fut": ["starò", "starai", "starà", "staremo", "starete", "staranno"],
              "ger": "stando", "part": "stato", "sub3s": "stia", "impr2s": "sta'"},
    "dare": {"inf": "dare", "pres": ["do", "dai", "dà", "diamo", "date", "danno"],
             "impf": ["davo", "davi", "dava", "davamo", "davate", "davano"],
             "fut": ["darò", "darai", "darà", "daremo", "darete", "daranno"],
             "ger": "dando", "part": "dato", "sub3s": "dia", "impr2s": "da'"},
    "sapere": {"inf": "sapere", "pres": ["so", "sai", "sa", "sappiamo", "sapete", "sanno"],
               "impf": ["sapevo", "sapevi", "sapeva", "sapevamo", "sapevate", "sapevano"],
               "fut": ["saprò", "saprai", "saprà", "sapremo", "saprete", "sapranno"],
               "ger": "sapendo", "part": "saputo", "sub3s": "sappia", "impr2s": "sappi"},
}
for l in ["fare", "dire", "dare", "sapere"]:
    add_verb(l, forms=IRREGULAR[l])
for l in ["andare", "venire", "uscire"]:
    add_verb(l, trans=False, aux="essere", forms=IRREGULAR[l])

SAYING = ["dire", "pensare", "credere", "sapere", "sentire", "capire", "ricordare", "decidere"]
MODALS = ["volere", "potere", "dovere"]

PROPN = ["Maria", "Giovanni", "Luca", "Paolo", "Anna", "Francesca", "Marco", "Giulia", "Sara", "Andrea",
         "Elena", "Matteo", "Chiara", "Roberto", "Rossi", "Bianchi", "Esposito", "Ricci"]
PLACES = ["Roma", "Milano", "Napoli", "Torino", "Firenze", "Venezia", "Bologna", "Genova", "Palermo",
          "Bari", "Italia", "Francia", "Spagna", "Germania", "Sicilia", "Sardegna"]
# in the lexicon only a subset; the rest falls back to the surface form
PROPN_IN_LEXICON = set(PROPN[:10] + PLACES[:10])

ADVERBS = ["molto", "sempre", "mai", "già", "spesso", "ancora", "poi", "oggi", "ieri", "domani",
           "bene", "male", "presto", "tardi", "qui", "lì", "insieme", "piano", "prima", "solo", "forse",
           "anche", "così", "troppo", "poco", "tanto", "subito", "davvero", "finalmente", "lentamente",
           "velocemente", "facilmente", "adesso", "stasera"]
TIME_ADV = ["oggi", "ieri", "domani", "spesso", "sempre", "poi", "adesso", "stasera", "presto", "tardi"]
MANNER_ADV = ["molto", "bene", "male", "piano", "lentamente", "velocemente", "insieme", "poco", "tanto",
              "troppo", "davvero", "ancora"]

NUMBERS = ["due", "tre", "quattro", "cinque", "sei", "sette", "otto", "dieci", "cento", "mille"]

SUBJ_PRON = {(1, "s"): "io", (2, "s"): "tu", (3, "s"): ["lui", "lei"], (1, "p"): "noi", (2, "p"): "voi",
             (3, "p"): "loro"}
PERSON_INDEX = {(1, "s"): 0, (2, "s"): 1, (3, "s"): 2, (1, "p"): 3, (2, "p"): 4, (3, "p"): 5}

ARTPREP = {
    "di": {"il": "del", "lo": "dello", "la": "della", "l'": "dell'", "i": "dei", "gli": "degli", "le": "delle"},
    "a": {"il": "al", "lo": "allo", "la": "alla", "l'": "all'", "i": "ai", "gli": "agli", "le": "alle"},
    "da": {"il": "dal", "lo": "dallo", "la": "dalla", "l'": "dall'", "i": "dai", "gli": "dagli", "le": "dalle"},
    "in": {"il": "nel", "lo": "nello", "la": "nella", "l'": "nell'", "i": "nei", "gli": "negli", "le": "nelle"},
    "su": {"il": "sul", "lo": "sullo", "la": "sulla", "l'": "sull'", "i": "sui", "gli": "sugli", "le": "sulle"},
}
PREPS = ["di", "a", "da", "in", "su", "con", "per", "tra"]

POSSESSIVE = {"mio": ("mio", "mia", "miei", "mie"), "tuo": ("tuo", "tua", "tuoi", "tue"),
              "suo": ("suo", "sua", "suoi", "sue"), "nostro": ("nostro", "nostra", "nostri", "nostre")}
DEMONSTRATIVE = {"questo": ("questo", "questa", "questi", "queste")}

CLITIC_OBJ = {("m", "s"): "lo", ("f", "s"): "la", ("m", "p"): "li", ("f", "p"): "le"}


def gn_index(g, n):
    return {("m", "s"): 0, ("f", "s"): 1, ("m", "p"): 2, ("f", "p"): 3}[(g, n)]


# ---------------------------------------------------------------------------
# lexicon

def build_lexicon():
    rows = []

    def add(form, lemma, tag):
        rows.append((form, lemma, tag))

    for sg, pl, g in NOUNS:
        G = g.upper()
        if sg == pl:
            add(sg, sg, f"NOUN-{G}:s")
            add(sg, sg, f"NOUN-{G}:p")
        else:
            add(sg, sg, f"NOUN-{G}:s")
            add(pl, sg, f"NOUN-{G}:p")
    for ms, fs, mp, fp in ADJ4:
        add(ms, ms, "ADJ:pos+m+s")
        add(fs, ms, "ADJ:pos+f+s")
        add(mp, ms, "ADJ:pos+m+p")
        add(fp, ms, "ADJ:pos+f+p")
    for s, p in ADJ2:
        for g in "mf":
            add(s, s, f"ADJ:pos+{g}+s")
            add(p, s, f"ADJ:pos+{g}+p")
    for lemma, v in list(VERBS.items()) + [(k, {"forms": IRREGULAR[k]}) for k in ("essere", "avere", "volere", "potere", "dovere", "stare")]:
        f = v["forms"]
        pos = "VER"
        if lemma in ("essere", "avere"):
            pos = "AUX"
        elif lemma in MODALS:
            pos = "MOD"
        add(f["inf"], lemma, f"{pos}:inf+pres")
        add(f["ger"], lemma, f"{pos}:ger+pres")
        for i, (person, number) in enumerate([(1, "s"), (2, "s"), (3, "s"), (1, "p"), (2, "p"), (3, "p")]):
            add(f["pres"][i], lemma, f"{pos}:ind+pres+{person}+{number}")
            add(f["impf"][i], lemma, f"{pos}:ind+impf+{person}+{number}")
            add(f["fut"][i], lemma, f"{pos}:ind+fut+{person}+{number}")
        part = f["part"]
        add(part, lemma, f"{pos}:part+past+s+m")
        add(part[:-1] + "a", lemma, f"{pos}:part+past+s+f")
        add(part[:-1] + "i", lemma, f"{pos}:part+past+p+m")
        add(part[:-1] + "e", lemma, f"{pos}:part+past+p+f")
        if f.get("sub3s"):
            add(f["sub3s"], lemma, f"{pos}:sub+pres+3+s")
        if f.get("impr2s"):
            add(f["impr2s"], lemma, f"{pos}:impr+pres+2+s")
    for art, g, n in [("il", "M", "s"), ("lo", "M", "s"), ("la", "F", "s"), ("i", "M", "p"),
                      ("gli", "M", "p"), ("le", "F", "p")]:
        add(art, "il", f"ART-{g}:{n}")
    add("l'", "il", "ART-M:s")
    add("l'", "il", "ART-F:s")
    for art, g in [("un", "M"), ("uno", "M"), ("una", "F"), ("un'", "F")]:
        add(art, "uno", f"ART-{g}:s")
    for prep, table in ARTPREP.items():
        for art, form in table.items():
            g = {"il": "M", "lo": "M", "la": "F", "l'": "M", "i": "M", "gli": "M", "le": "F"}[art]
            n = "p" if art in ("i", "gli", "le") else "s"
            add(form, prep, f"ARTPRE-{g}:{n}")
    for p in PREPS + ["fra", "d'"]:
        add(p, "di" if p == "d'" else p, "PRE")
    for lemma, forms in list(POSSESSIVE.items()) + list(DEMONSTRATIVE.items()):
        kind = "POSS" if lemma in POSSESSIVE else "DEMO"
        for form, (g, n) in zip(forms, [("M", "S"), ("F", "S"), ("M", "P"), ("F", "P")]):
            add(form, lemma, f"DET-{kind}:{g.lower()}+{n.lower()}")
            add(form, lemma, f"PRO-{kind}-{g}-{n}")
    for person, number, form in [(1, "S", "io"), (2, "S", "tu"), (3, "S", "lui"), (3, "S", "lei"),
                                 (1, "P", "noi"), (2, "P", "voi"), (3, "P", "loro")]:
        add(form, form, f"PRO-PERS-{person}-{number}")
    for form, lemma, tag in [("lo", "lo", "PRO-PERS-CLI-3-M-S"), ("la", "lo", "PRO-PERS-CLI-3-F-S"),
                             ("li", "lo", "PRO-PERS-CLI-3-M-P"), ("le", "lo", "PRO-PERS-CLI-3-F-P"),
                             ("le", "le", "PRO-PERS-CLI-3-F-S"), ("gli", "gli", "PRO-PERS-CLI-3-M-S"),
                             ("mi", "mi", "PRO-PERS-CLI-1-S"), ("ti", "ti", "PRO-PERS-CLI-2-S"),
                             ("ci", "ci", "PRO-PERS-CLI-1-P"), ("c'", "ci", "PRO-PERS-CLI-1-P"),
                             ("vi", "vi", "PRO-PERS-CLI-2-P"), ("ne", "ne", "NE"), ("si", "si", "SI")]:
        add(form, lemma, tag)
    add("che", "che", "CHE")
    add("che", "che", "PRO-WH")
    for c in ["e", "ma", "o", "né"]:
        add(c, c, "CON")
    for c in ["perché", "quando", "se", "mentre", "come"]:
        add(c, c, "CON")
    add("come", "come", "ADV")
    for a in ADVERBS:
        add(a, a, "ADV")
    for n in NUMBERS:
        add(n, n, "NUM")
    for name in sorted(PROPN_IN_LEXICON):
        add(name, name, "NPR")
    for p in [".", "!", "?"]:
        add(p, p, "SENT")
    for p in [",", ";", ":"]:
        add(p, p, "PON")
    seen = set()
    out = []
    for r in rows:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


# ---------------------------------------------------------------------------
# sentence generation


class Word:
    __slots__ = ("form", "lemma", "upos")

    def __init__(self, form, lemma, upos):
        self.form, self.lemma, self.upos = form, lemma, upos


class Multi:
    """Multiword token: one surface, several syntactic words."""
    __slots__ = ("form", "words")

    def __init__(self, form, words):
        self.form, self.words = form, words


class Generator:
    def __init__(self, rng, nouns, adjs4, adjs2, verbs, names):
        self.r = rng
        self.nouns = nouns
        self.adjs4 = adjs4
        self.adjs2 = adjs2
        self.verbs = verbs
        pick = lambda cond: [v for v in verbs if cond(VERBS[v])] or sorted(v for v in VERBS if cond(VERBS[v]))
        self.trans = pick(lambda v: v["trans"])
        self.intrans = pick(lambda v: not v["trans"] and v["aux"] == "avere")
        self.motion = pick(lambda v: v["aux"] == "essere")
        self.saying = [v for v in SAYING if v in verbs] or SAYING
        self.names = names

    def chance(self, p):
        return self.r.random() < p

    # -- noun phrases

    def article(self, noun, g, n, definite=True):
        if definite:
            if n == "s":
                if starts_vowel(noun):
                    return "l'"
                if g == "m":
                    return "lo" if lo_class(noun) else "il"
                return "la"
            if g == "m":
                return "gli" if (starts_vowel(noun) or lo_class(noun)) else "i"
            return "le"
        if g == "m":
            return "uno" if lo_class(noun) else "un"
        return "un'" if starts_vowel(noun) else "una"

    def adjective(self, g, n):
        if self.chance(0.6):
            forms = self.r.choice(self.adjs4)
            return Word(forms[gn_index(g, n)], forms[0], "ADJ")
        s, p = self.r.choice(self.adjs2)
        return Word(s if n == "s" else p, s, "ADJ")

    def noun_phrase(self, prep=None, allow_rel=True, force_number=None):
        """Returns (items, gender, number)."""
        sg, pl, g = self.r.choice(self.nouns)
        n = force_number or ("p" if self.chance(0.3) else "s")
        form = sg if n == "s" else pl
        items = []
        head = [Word(form, sg, "NOUN")]
        pre_adj = None
        if self.chance(0.12):
            forms = self.r.choice([a for a in self.adjs4 if a[0] in PRENOMINAL] or self.adjs4)
            pre_adj = Word(forms[gn_index(g, n)], forms[0], "ADJ")
        first = pre_adj.form if pre_adj else form
        kind = self.r.random()
        det = []
        if kind < 0.6:
            art = self.article(first, g, n, True)
            det = [Word(art, "il", "DET")]
        elif kind < 0.78 and n == "s":
            art = self.article(first, g, n, False)
            det = [Word(art, "uno", "DET")]
        elif kind < 0.86:
            lemma = self.r.choice(list(POSSESSIVE))
            art = self.article(POSSESSIVE[lemma][gn_index(g, n)], g, n, True)
            det = [Word(art, "il", "DET"), Word(POSSESSIVE[lemma][gn_index(g, n)], lemma, "DET")]
        elif kind < 0.93:
            det = [Word(DEMONSTRATIVE["questo"][gn_index(g, n)], "questo", "DET")]
        elif n == "p":
            num = self.r.choice(NUMBERS[:-2]) if self.chance(0.7) else str(self.r.randint(2, 90))
            det = [Word(num, num, "NUM")]
        else:
            art = self.article(first, g, n, True)
            det = [Word(art, "il", "DET")]

        if prep and det and det[0].upos == "DET" and det[0].lemma == "il" and prep in ARTPREP:
            art = det[0].form
            items.append(Multi(ARTPREP[prep][art], [Word(prep, prep, "ADP"), Word(art, "il", "DET")]))
            det = det[1:]
        elif prep:
            items.append(Word(prep, prep, "ADP"))
        items += det
        if pre_adj:
            items.append(pre_adj)
        items += head
        if self.chance(0.3):
            items.append(self.adjective(g, n))
        if self.chance(0.08):
            sub, _, _ = self.noun_phrase(prep="di", allow_rel=False)
            items += sub
        if allow_rel and self.chance(0.07):
            items.append(Word("che", "che", "PRON"))
            items += self.simple_vp((3, n), (g, n), depth=2)
        return items, g, n

    def name_phrase(self, prep=None):
        if prep and prep in ("a", "in") and self.chance(0.7):
            return [Word(prep, prep, "ADP"), Word(self.r.choice(PLACES), None, "PROPN")]
        name = self.r.choice(self.names)
        out = [Word(prep, prep, "ADP")] if prep else []
        out.append(Word(name, None, "PROPN"))
        if self.chance(0.3):
            out.append(Word(self.r.choice(["Rossi", "Bianchi", "Esposito", "Ricci"]), None, "PROPN"))
        return out

    def object_phrase(self):
        if self.chance(0.12):
            return self.name_phrase()
        if self.chance(0.05):
            sg, pl, g = self.r.choice(self.nouns)
            art = self.article(sg, g, "s")
            return [Multi(ARTPREP["di"][art], [Word("di", "di", "ADP"), Word(art, "il", "DET")]),
                    Word(sg, sg, "NOUN")]
        items, _, _ = self.noun_phrase()
        return items

    def adjunct(self):
        r = self.r.random()
        if r < 0.45:
            prep = self.r.choice(["a", "in", "da", "su", "con", "per", "tra", "di", "in", "a"])
            if self.chance(0.25):
                return self.name_phrase(prep)
            items, _, _ = self.noun_phrase(prep=prep, allow_rel=False)
            return items
        if r < 0.8:
            a = self.r.choice(TIME_ADV + MANNER_ADV)
            return [Word(a, a, "ADV")]
        if r < 0.9:
            return [Word("alle", None, None), Word(f"{self.r.randint(1, 12)}.{self.r.choice(['00', '15', '30', '45'])}", None, "NUM")]
        num = self.r.choice(["due", "tre", "cinque", "dieci"])
        unit = self.r.choice([("giorni", "giorno"), ("anni", "anno"), ("ore", "ora"), ("settimane", "settimana")])
        return [Word("per", "per", "ADP"), Word(num, num, "NUM"), Word(unit[0], unit[1], "NOUN")]

    # -- verb phrases

    def finite(self, lemma, person, tense=None):
        forms = VERBS[lemma]["forms"] if lemma in VERBS else IRREGULAR[lemma]
        tense = tense or self.r.choice(["pres", "pres", "pres", "impf", "fut"])
        return forms[tense][PERSON_INDEX[person]]

    def participle(self, lemma, g="m", n="s"):
        forms = VERBS[lemma]["forms"] if lemma in VERBS else IRREGULAR[lemma]
        p = forms["part"]
        return p[:-1] + {("m", "s"): "o", ("f", "s"): "a", ("m", "p"): "i", ("f", "p"): "e"}[(g, n)]

    def simple_vp(self, person, subj_gn, depth=0):
        g, n = subj_gn
        out = []
        if self.chance(0.15):
            out.append(Word("non", "non", "ADV"))
        r = self.r.random()
        if r < 0.28:
            v = self.r.choice(self.trans)
            out.append(Word(self.finite(v, person), v, "VERB"))
            out += self.object_phrase()
        elif r < 0.42:
            v = self.r.choice(self.trans)
            out.append(Word(self.finite("avere", person), "avere", "AUX"))
            out.append(Word(self.participle(v), v, "VERB"))
            out += self.object_phrase()
        elif r < 0.5:
            v = self.r.choice(self.motion)
            out.append(Word(self.finite("essere", person), "essere", "AUX"))
            out.append(Word(self.participle(v, g, n), v, "VERB"))
        elif r < 0.6:
            out.append(Word(self.finite("essere", person), "essere", "AUX"))
            if self.chance(0.2):
                a = self.r.choice(MANNER_ADV[:3])
                out.append(Word(a, a, "ADV"))
            out.append(self.adjective(g, n))
        elif r < 0.7:
            m = self.r.choice(MODALS)
            out.append(Word(self.finite(m, person), m, "AUX"))
            v = self.r.choice(self.trans)
            inf = VERBS[v]["forms"]["inf"]
            if self.chance(0.35):
                og, on = self.r.choice([("m", "s"), ("f", "s"), ("m", "p"), ("f", "p")])
                cli = CLITIC_OBJ[(og, on)]
                out.append(Multi(inf[:-1] + cli, [Word(inf[:-1], v, "VERB"), Word(cli, "lo", "PRON")]))
            else:
                out.append(Word(inf, v, "VERB"))
                out += self.object_phrase()
        elif r < 0.78:
            og, on = self.r.choice([("m", "s"), ("f", "s"), ("m", "p"), ("f", "p")])
            cli = CLITIC_OBJ[(og, on)]
            v = self.r.choice(self.trans)
            out.append(Word(cli, "lo", "PRON"))
            out.append(Word(self.finite(v, person), v, "VERB"))
        elif r < 0.85 and depth < 1 and self.saying:
            v = self.r.choice(self.saying)
            out.append(Word(self.finite(v, person), v, "VERB"))
            out.append(Word("che", "che", "SCONJ"))
            out += self.clause(depth + 1)
        elif r < 0.91:
            out.append(Word(self.finite("avere", person), "avere", "VERB"))
            out += self.object_phrase()
        elif r < 0.95 and self.intrans:
            v = self.r.choice(self.intrans)
            out.append(Word(self.finite(v, person), v, "VERB"))
            a = self.r.choice(MANNER_ADV)
            out.append(Word(a, a, "ADV"))
        else:
            v = self.r.choice(self.trans)
            out.append(Word(self.finite("stare", person, "pres"), "stare", "AUX"))
            out.append(Word(VERBS[v]["forms"]["ger"], v, "VERB"))
            out += self.object_phrase()
        return out

    def subject(self):
        r = self.r.random()
        if r < 0.45:
            items, g, n = self.noun_phrase()
            return items, (3, n), (g, n)
        if r < 0.65:
            items = self.name_phrase()
            return items, (3, "s"), (self.r.choice("mf"), "s")
        if r < 0.8:
            person = self.r.choice(list(SUBJ_PRON))
            p = SUBJ_PRON[person]
            p = self.r.choice(p) if isinstance(p, list) else p
            return [Word(p, p, "PRON")], person, (self.r.choice("mf"), person[1])
        person = self.r.choice(list(SUBJ_PRON))
        return [], person, (self.r.choice("mf"), person[1])

    def clause(self, depth=0):
        items, person, gn = self.subject()
        items = list(items)
        if self.chance(0.12):
            a = self.r.choice(TIME_ADV)
            items = [Word(a, a, "ADV")] + ([Word(",", ",", "PUNCT")] if self.chance(0.3) else []) + items
        items += self.simple_vp(person, gn, depth)
        if self.chance(0.45):
            items += self.adjunct()
        return items

    def sentence(self):
        items = self.clause()
        if self.chance(0.15):
            if self.chance(0.5):
                items.append(Word(",", ",", "PUNCT"))
            c = self.r.choice(["e", "ma", "o"])
            items.append(Word(c, c, "CCONJ"))
            items += self.clause()
        elif self.chance(0.06):
            items.append(Word(",", ",", "PUNCT"))
            c = self.r.choice(["perché", "quando", "mentre", "se"])
            items.append(Word(c, c, "SCONJ"))
            items += self.clause()
        if self.chance(0.05):
            items = [Word("c'", "ci", "PRON"), Word("è", "essere", "VERB")] + self.object_phrase()
        p = self.r.random()
        end = "." if p < 0.9 else ("!" if p < 0.95 else "?")
        items.append(Word(end, end, "PUNCT"))
        return self.finish(items)

    def finish(self, items):
        # expand the "alle HH.MM" placeholder into a multiword token
        out = []
        for it in items:
            if isinstance(it, Word) and it.upos is None:
                out.append(Multi("alle", [Word("a", "a", "ADP"), Word("le", "il", "DET")]))
            elif isinstance(it, Word) and it.upos == "PROPN" and it.lemma is None:
                out.append(Word(it.form, it.form, "PROPN"))
            elif isinstance(it, Word) and it.upos == "NUM" and it.lemma is None:
                out.append(Word(it.form, it.form, "NUM"))
            else:
                out.append(it)
        first = out[0]
        if isinstance(first, Multi):
            first.form = first.form[0].upper() + first.form[1:]
            first.words[0].form = first.words[0].form[0].upper() + first.words[0].form[1:]
        else:
            first.form = first.form[0].upper() + first.form[1:]
        return out


def no_space_after(form):
    return form.endswith("'")


def no_space_before(form):
    return form in {".", ",", "!", "?", ";", ":"}


def render(sent, sent_id):
    text = ""
    rows = []
    idx = 1
    for k, it in enumerate(sent):
        nxt = sent[k + 1] if k + 1 < len(sent) else None
        space = nxt is not None and not no_space_after(it.form) and not no_space_before(nxt.form)
        misc = "_" if space or nxt is None else "SpaceAfter=No"
        text += it.form + (" " if space else "")
        if isinstance(it, Multi):
            rows.append(f"{idx}-{idx + len(it.words) - 1}\t{it.form}\t_\t_\t_\t_\t_\t_\t_\t{misc}")
            for w in it.words:
                rows.append(f"{idx}\t{w.form}\t{w.lemma}\t{w.upos}\t_\t_\t_\t_\t_\t_")
                idx += 1
        else:
            rows.append(f"{idx}\t{it.form}\t{it.lemma}\t{it.upos}\t_\t_\t_\t_\t_\t{misc}")
            idx += 1
    return f"# sent_id = {sent_id}\n# text = {text}\n" + "\n".join(rows) + "\n"


def word_count(sents):
    n = 0
    for s in sents:
        for it in s:
            n += len(it.words) if isinstance(it, Multi) else 1
    return n


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "desk"))
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--train-tokens", type=int, default=60000)
    ap.add_argument("--test-tokens", type=int, default=10000)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    nouns = sorted(NOUNS)
    verbs = sorted(VERBS)
    adj4 = sorted(ADJ4)
    adj2 = sorted(ADJ2)
    held_nouns = set(rng.sample(range(len(nouns)), len(nouns) // 8))
    held_verbs = set(rng.sample(range(len(verbs)), len(verbs) // 8))
    held_adj4 = set(rng.sample(range(len(adj4)), len(adj4) // 8))
    held_adj2 = set(rng.sample(range(len(adj2)), len(adj2) // 8))
    keep = {"latte", "latta", "porta", "cane", "arto", "arte", "pesca", "volta", "parte", "stato", "piano"}
    keep_verbs = {"portare", "dormire", "essere", "avere"}

    def split(items, held, keepset, key):
        train = [x for i, x in enumerate(items) if i not in held or key(x) in keepset]
        test_only = [x for i, x in enumerate(items) if i in held and key(x) not in keepset]
        return train, test_only

    n_train, n_test = split(nouns, held_nouns, keep, lambda x: x[0])
    v_train, v_test = split(verbs, held_verbs, keep_verbs, lambda x: x)
    a4_train, a4_test = split(adj4, held_adj4, set(), lambda x: x[0])
    a2_train, a2_test = split(adj2, held_adj2, {"direzionale"}, lambda x: x[0])
    names_train = PROPN[:14]

    train_gen = Generator(rng, n_train, a4_train, a2_train, v_train, names_train)
    test_gen = Generator(rng, nouns, adj4, adj2, verbs, PROPN)
    # test sentences lean on the held-out lemmas so that unknown words matter
    test_gen_unseen = Generator(rng, n_test + n_train[:20], a4_test + a4_train[:5], a2_test + a2_train[:5],
                                v_test + v_train[:5], PROPN[10:])

    train, test = [], []
    while word_count(train) < args.train_tokens:
        train.append(train_gen.sentence())
    while word_count(test) < args.test_tokens:
        gen = test_gen_unseen if rng.random() < 0.25 else test_gen
        test.append(gen.sentence())

    # fixed sentences exercising gender disambiguation by article
    extra = [
        [Word("Il", "il", "DET"), Word("latte", "latte", "NOUN"), Word("è", "essere", "AUX"),
         Word("freddo", "freddo", "ADJ"), Word(".", ".", "PUNCT")],
        [Word("Le", "il", "DET"), Word("latte", "latta", "NOUN"), Word("sono", "essere", "AUX"),
         Word("vuote", "vuoto", "ADJ"), Word(".", ".", "PUNCT")],
        [Word("Il", "il", "DET"), Word("cane", "cane", "NOUN"), Word("dorme", "dormire", "VERB"),
         Word(".", ".", "PUNCT")],
    ]
    train += extra[:2]

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "desk-train.conllu", "w", encoding="utf-8") as f:
        for i, s in enumerate(train):
            f.write(render(s, f"desk-train-{i + 1}") + "\n")
    with open(out / "desk-test.conllu", "w", encoding="utf-8") as f:
        for i, s in enumerate(test):
            f.write(render(s, f"desk-test-{i + 1}") + "\n")
    with open(out / "desk-lexicon.tsv", "w", encoding="utf-8") as f:
        for form, lemma, tag in build_lexicon():
            f.write(f"{form}\t{lemma}\t{tag}\n")
    print(f"train: {len(train)} sentences, {word_count(train)} words")
    print(f"test: {len(test)} sentences, {word_count(test)} words")


if __name__ == "__main__":
    main()
