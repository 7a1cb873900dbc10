#!/usr/bin/env python3
"""Regenerate the shipped per-language ingredient vocabularies.

Each vocabulary is a curated base list of label-realistic ingredient
names, expanded with simple morphological patterns (powder / extract /
dried / ...) plus a shared block of additive codes (e300, e472b, ...).

The script enforces the data invariants the rest of the toolkit leans
on:

  * every entry is a canonicalize() fixpoint (trimmed, casefolded, NFC)
  * every whitespace-separated word has at least 2 code points
  * entries contain no delimiter code points (, ; . 、 ، ·) or colons
  * no word of any entry appears in the header stop list
  * digits only occur in additive codes (e + 3 digits + optional
    letter), so purely numeric noise tokens can never sit within edit
    distance 2 of a vocabulary entry
  * entry length <= 28 code points (<= 12 for ja)

Run from the repository root:  python3 scripts/make_vocab.py
"""

from __future__ import annotations

import re
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "ingreval" / "data"
OUT = DATA / "vocab"

DELIMITER_CHARS = set(",;.、،·:：")
E_NUMBER_RE = re.compile(r"^e[0-9]{3}[a-e]?$")

E_NUMBERS = [
    "e100", "e101", "e102", "e104", "e110", "e120", "e122", "e124",
    "e129", "e131", "e132", "e133", "e140", "e141", "e150a", "e150b",
    "e150c", "e150d", "e153", "e160a", "e160b", "e160c", "e162",
    "e163", "e170", "e171", "e172", "e200", "e202", "e211", "e220",
    "e223", "e250", "e251", "e260", "e270", "e280", "e290", "e296",
    "e300", "e301", "e306", "e322", "e325", "e326", "e327", "e330",
    "e331", "e332", "e333", "e334", "e335", "e336", "e337", "e338",
    "e339", "e340", "e341", "e407", "e410", "e412", "e413", "e414",
    "e415", "e416", "e420", "e421", "e422", "e440", "e450", "e451",
    "e452", "e460", "e461", "e463", "e464", "e466", "e471", "e472a",
    "e472b", "e472c", "e473", "e475", "e476", "e481", "e491", "e500",
    "e501", "e503", "e504", "e507", "e508", "e509", "e511", "e524",
    "e551", "e621", "e627", "e631", "e635", "e901", "e903", "e950",
    "e951", "e952", "e954", "e955", "e960", "e965", "e967", "e968",
]

BASES = {
    "en": [
        "water", "sugar", "salt", "wheat flour", "palm oil",
        "rapeseed oil", "sunflower oil", "olive oil", "cocoa butter",
        "cocoa mass", "milk powder", "skimmed milk powder",
        "whey powder", "lactose", "butter", "cream", "yeast",
        "glucose syrup", "fructose", "dextrose", "maltodextrin",
        "modified starch", "corn starch", "potato starch", "rice flour",
        "soy lecithin", "emulsifier", "stabiliser", "preservative",
        "antioxidant", "citric acid", "ascorbic acid", "lactic acid",
        "sodium bicarbonate", "baking powder", "vanilla", "vanillin",
        "cinnamon", "ginger", "turmeric", "paprika", "black pepper",
        "garlic", "onion", "tomato", "carrot", "celery", "leek",
        "parsley", "basil", "oregano", "rosemary", "thyme",
        "lemon juice", "apple juice", "orange juice", "raisins",
        "hazelnuts", "almonds", "walnuts", "peanuts", "cashew nuts",
        "coconut", "honey", "egg white", "egg yolk", "whole egg",
        "gelatin", "pectin", "guar gum", "xanthan gum", "carrageenan",
        "beef", "pork", "chicken", "fish", "shrimp", "anchovies",
        "mackerel", "salmon", "cod", "tuna", "rice", "oats",
        "rye flour", "barley", "buckwheat", "quinoa", "lentils",
        "chickpeas", "green peas", "spinach", "broccoli", "cauliflower",
        "mushrooms", "natural flavouring", "caramel", "dark chocolate",
        "milk chocolate", "malt extract", "invert sugar syrup",
    ],
    "no": [
        "vann", "sukker", "salt", "hvetemel", "palmeolje", "rapsolje",
        "solsikkeolje", "olivenolje", "kakaosmør", "kakaomasse",
        "melkepulver", "skummetmelkpulver", "mysepulver", "laktose",
        "smør", "fløte", "gjær", "glukosesirup", "fruktose",
        "druesukker", "maltodekstrin", "modifisert stivelse",
        "maisstivelse", "potetstivelse", "rismel", "soyalecitin",
        "emulgator", "stabilisator", "konserveringsmiddel",
        "antioksidant", "sitronsyre", "askorbinsyre", "melkesyre",
        "natron", "bakepulver", "vanilje", "vanillin", "kanel",
        "ingefær", "gurkemeie", "paprika", "sort pepper", "hvitløk",
        "løk", "tomat", "gulrot", "selleri", "purre", "persille",
        "basilikum", "oregano", "rosmarin", "timian", "sitronsaft",
        "eplesaft", "appelsinsaft", "rosiner", "hasselnøtter",
        "mandler", "valnøtter", "peanøtter", "cashewnøtter", "kokos",
        "honning", "eggehvite", "eggeplomme", "helegg", "gelatin",
        "pektin", "guarkjernemel", "xanthangummi", "karragenan",
        "storfekjøtt", "svinekjøtt", "kylling", "fisk", "reker",
        "ansjos", "makrell", "laks", "torsk", "ris", "havre", "rugmel",
        "bygg", "bokhvete", "linser", "kikerter", "grønne erter",
        "spinat", "brokkoli", "blomkål", "sopp", "naturlig aroma",
        "karamell", "mørk sjokolade", "melkesjokolade", "maltekstrakt",
    ],
    "sv": [
        "vatten", "socker", "salt", "vetemjöl", "palmolja", "rapsolja",
        "solrosolja", "olivolja", "kakaosmör", "kakaomassa",
        "mjölkpulver", "skummjölkspulver", "vasslepulver", "laktos",
        "smör", "grädde", "jäst", "glukossirap", "fruktos",
        "druvsocker", "maltodextrin", "modifierad stärkelse",
        "majsstärkelse", "potatisstärkelse", "rismjöl", "sojalecitin",
        "emulgeringsmedel", "stabiliseringsmedel",
        "konserveringsmedel", "antioxidationsmedel", "citronsyra",
        "askorbinsyra", "mjölksyra", "bikarbonat", "bakpulver",
        "vanilj", "vanillin", "kanel", "ingefära", "gurkmeja",
        "paprika", "svartpeppar", "vitlök", "lök", "tomat", "morot",
        "selleri", "purjolök", "persilja", "basilika", "oregano",
        "rosmarin", "timjan", "citronsaft", "äppeljuice",
        "apelsinjuice", "russin", "hasselnötter", "mandel",
        "valnötter", "jordnötter", "cashewnötter", "kokos", "honung",
        "äggvita", "äggula", "helägg", "gelatin", "pektin",
        "guarkärnmjöl", "xantangummi", "karragenan", "nötkött",
        "fläskkött", "kyckling", "fisk", "räkor", "ansjovis",
        "makrill", "lax", "torsk", "ris", "havre", "rågmjöl", "korn",
        "bovete", "linser", "kikärter", "gröna ärtor", "spenat",
        "broccoli", "blomkål", "svamp", "naturlig arom", "karamell",
        "mörk choklad", "mjölkchoklad", "maltextrakt",
    ],
    "da": [
        "vand", "sukker", "salt", "hvedemel", "palmeolie", "rapsolie",
        "solsikkeolie", "olivenolie", "kakaosmør", "kakaomasse",
        "mælkepulver", "skummetmælkspulver", "vallepulver", "laktose",
        "smør", "fløde", "gær", "glukosesirup", "fruktose",
        "druesukker", "maltodextrin", "modificeret stivelse",
        "majsstivelse", "kartoffelstivelse", "rismel", "sojalecithin",
        "emulgator", "stabilisator", "konserveringsmiddel",
        "antioxidant", "citronsyre", "ascorbinsyre", "mælkesyre",
        "natron", "bagepulver", "vanilje", "vanillin", "kanel",
        "ingefær", "gurkemeje", "paprika", "sort peber", "hvidløg",
        "løg", "tomat", "gulerod", "selleri", "porre", "persille",
        "basilikum", "oregano", "rosmarin", "timian", "citronsaft",
        "æblejuice", "appelsinjuice", "rosiner", "hasselnødder",
        "mandler", "valnødder", "jordnødder", "cashewnødder", "kokos",
        "honning", "æggehvide", "æggeblomme", "helæg", "gelatine",
        "pektin", "guargummi", "xanthangummi", "carrageenan",
        "oksekød", "svinekød", "kylling", "fisk", "rejer", "ansjoser",
        "makrel", "laks", "torsk", "ris", "havre", "rugmel", "byg",
        "boghvede", "linser", "kikærter", "grønne ærter", "spinat",
        "broccoli", "blomkål", "svampe", "naturlig aroma", "karamel",
        "mørk chokolade", "mælkechokolade", "maltekstrakt",
    ],
    "de": [
        "wasser", "zucker", "salz", "weizenmehl", "palmöl", "rapsöl",
        "sonnenblumenöl", "olivenöl", "kakaobutter", "kakaomasse",
        "milchpulver", "magermilchpulver", "molkenpulver", "laktose",
        "butter", "sahne", "hefe", "glukosesirup", "fruktose",
        "traubenzucker", "maltodextrin", "modifizierte stärke",
        "maisstärke", "kartoffelstärke", "reismehl", "sojalecithin",
        "emulgator", "stabilisator", "konservierungsstoff",
        "antioxidationsmittel", "zitronensäure", "ascorbinsäure",
        "milchsäure", "natron", "backpulver", "vanille", "vanillin",
        "zimt", "ingwer", "kurkuma", "paprika", "schwarzer pfeffer",
        "knoblauch", "zwiebeln", "tomaten", "karotten", "sellerie",
        "lauch", "petersilie", "basilikum", "oregano", "rosmarin",
        "thymian", "zitronensaft", "apfelsaft", "orangensaft",
        "rosinen", "haselnüsse", "mandeln", "walnüsse", "erdnüsse",
        "cashewkerne", "kokosnuss", "honig", "eiklar", "eigelb",
        "vollei", "gelatine", "pektin", "guarkernmehl", "xanthan",
        "carrageen", "rindfleisch", "schweinefleisch",
        "hähnchenfleisch", "fisch", "garnelen", "sardellen", "makrele",
        "lachs", "kabeljau", "reis", "hafer", "roggenmehl", "gerste",
        "buchweizen", "linsen", "kichererbsen", "erbsen", "spinat",
        "brokkoli", "blumenkohl", "champignons",
        "natürliches aroma", "karamell", "zartbitterschokolade",
        "vollmilchschokolade", "malzextrakt",
    ],
    "fr": [
        "eau", "sucre", "sel", "farine de blé", "huile de palme",
        "huile de colza", "huile de tournesol", "huile d'olive",
        "beurre de cacao", "pâte de cacao", "lait en poudre",
        "lactose", "beurre", "crème", "levure", "sirop de glucose",
        "fructose", "dextrose", "maltodextrine", "amidon modifié",
        "amidon de maïs", "fécule de pomme de terre", "farine de riz",
        "lécithine de soja", "émulsifiant", "stabilisant",
        "conservateur", "antioxydant", "acide citrique",
        "acide ascorbique", "acide lactique", "bicarbonate de sodium",
        "levure chimique", "vanille", "vanilline", "cannelle",
        "gingembre", "curcuma", "paprika", "poivre noir", "ail",
        "oignon", "tomate", "carotte", "céleri", "poireau", "persil",
        "basilic", "origan", "romarin", "thym", "jus de citron",
        "jus de pomme", "jus d'orange", "raisins secs", "noisettes",
        "amandes", "noix", "cacahuètes", "noix de cajou",
        "noix de coco", "miel", "blanc d'œuf", "jaune d'œuf",
        "œuf entier", "gélatine", "pectine", "gomme de guar",
        "gomme xanthane", "carraghénane", "viande de bœuf",
        "viande de porc", "poulet", "poisson", "crevettes", "anchois",
        "maquereau", "saumon", "cabillaud", "riz", "avoine",
        "farine de seigle", "orge", "sarrasin", "lentilles",
        "pois chiches", "petits pois", "épinards", "brocoli",
        "chou-fleur", "champignons", "arôme naturel", "caramel",
        "chocolat noir", "chocolat au lait", "extrait de malt",
    ],
    "it": [
        "acqua", "zucchero", "sale", "farina di grano",
        "olio di palma", "olio di colza", "olio di girasole",
        "olio d'oliva", "burro di cacao", "pasta di cacao",
        "latte in polvere", "lattosio", "burro", "panna", "lievito",
        "sciroppo di glucosio", "fruttosio", "destrosio",
        "maltodestrina", "amido modificato", "amido di mais",
        "fecola di patate", "farina di riso", "lecitina di soia",
        "emulsionante", "stabilizzante", "conservante",
        "antiossidante", "acido citrico", "acido ascorbico",
        "acido lattico", "bicarbonato di sodio", "vaniglia",
        "vanillina", "cannella", "zenzero", "curcuma", "paprica",
        "pepe nero", "aglio", "cipolla", "pomodoro", "carota",
        "sedano", "porro", "prezzemolo", "basilico", "origano",
        "rosmarino", "timo", "succo di limone", "succo di mela",
        "succo d'arancia", "uvetta", "nocciole", "mandorle", "noci",
        "arachidi", "anacardi", "cocco", "miele", "albume", "tuorlo",
        "uova intere", "gelatina", "pectina", "farina di guar",
        "gomma di xanthan", "carragenina", "manzo", "maiale", "pollo",
        "pesce", "gamberetti", "acciughe", "sgombro", "salmone",
        "merluzzo", "riso", "avena", "farina di segale", "orzo",
        "grano saraceno", "lenticchie", "ceci", "piselli", "spinaci",
        "broccoli", "cavolfiore", "funghi", "aroma naturale",
        "caramello", "cioccolato fondente", "cioccolato al latte",
        "estratto di malto",
    ],
    "nl": [
        "water", "suiker", "zout", "tarwebloem", "palmolie",
        "raapzaadolie", "zonnebloemolie", "olijfolie", "cacaoboter",
        "cacaomassa", "melkpoeder", "magere melkpoeder", "weipoeder",
        "lactose", "boter", "room", "gist", "glucosestroop",
        "fructose", "dextrose", "maltodextrine",
        "gemodificeerd zetmeel", "maïszetmeel", "aardappelzetmeel",
        "rijstmeel", "sojalecithine", "emulgator", "stabilisator",
        "conserveermiddel", "antioxidant", "citroenzuur",
        "ascorbinezuur", "melkzuur", "natriumbicarbonaat",
        "bakpoeder", "vanille", "vanilline", "kaneel", "gember",
        "kurkuma", "paprika", "zwarte peper", "knoflook", "ui",
        "tomaat", "wortel", "selderij", "prei", "peterselie",
        "basilicum", "oregano", "rozemarijn", "tijm", "citroensap",
        "appelsap", "sinaasappelsap", "rozijnen", "hazelnoten",
        "amandelen", "walnoten", "pinda's", "cashewnoten", "kokos",
        "honing", "eiwit", "eigeel", "heel ei", "gelatine", "pectine",
        "guarpitmeel", "xanthaangom", "carrageen", "rundvlees",
        "varkensvlees", "kip", "vis", "garnalen", "ansjovis",
        "makreel", "zalm", "kabeljauw", "rijst", "haver", "roggemeel",
        "gerst", "boekweit", "linzen", "kikkererwten", "doperwten",
        "spinazie", "broccoli", "bloemkool", "champignons",
        "natuurlijk aroma", "karamel", "pure chocolade",
        "melkchocolade", "moutextract",
    ],
    "fi": [
        "vesi", "sokeri", "suola", "vehnäjauho", "palmuöljy",
        "rypsiöljy", "auringonkukkaöljy", "oliiviöljy", "kaakaovoi",
        "kaakaomassa", "maitojauhe", "herajauhe", "laktoosi", "voi",
        "kerma", "hiiva", "glukoosisiirappi", "fruktoosi",
        "dekstroosi", "maltodekstriini", "muunnettu tärkkelys",
        "maissitärkkelys", "perunatärkkelys", "riisijauho",
        "soijalesitiini", "emulgointiaine", "stabilointiaine",
        "säilöntäaine", "hapettumisenestoaine", "sitruunahappo",
        "askorbiinihappo", "maitohappo", "ruokasooda", "leivinjauhe",
        "vanilja", "vanilliini", "kaneli", "inkivääri", "kurkuma",
        "paprika", "mustapippuri", "valkosipuli", "sipuli",
        "tomaatti", "porkkana", "selleri", "purjo", "persilja",
        "basilika", "oregano", "rosmariini", "timjami",
        "sitruunamehu", "omenamehu", "appelsiinimehu", "rusinat",
        "hasselpähkinät", "mantelit", "saksanpähkinät",
        "maapähkinät", "cashewpähkinät", "kookos", "hunaja",
        "munanvalkuainen", "munankeltuainen", "kananmuna", "liivate",
        "pektiini", "guarkumi", "ksantaanikumi", "karrageeni",
        "naudanliha", "sianliha", "broileri", "kala", "katkaravut",
        "sardellit", "makrilli", "lohi", "turska", "riisi", "kaura",
        "ruisjauho", "ohra", "tattari", "linssit", "kikherneet",
        "herneet", "pinaatti", "parsakaali", "kukkakaali",
        "herkkusienet", "luontainen aromi", "karamelli",
        "tumma suklaa", "maitosuklaa", "mallasuute",
    ],
    "pt": [
        "água", "açúcar", "sal", "farinha de trigo", "óleo de palma",
        "óleo de colza", "óleo de girassol", "azeite de oliva",
        "manteiga de cacau", "massa de cacau", "leite em pó",
        "lactose", "manteiga", "natas", "levedura",
        "xarope de glicose", "frutose", "dextrose", "maltodextrina",
        "amido modificado", "amido de milho", "fécula de batata",
        "farinha de arroz", "lecitina de soja", "emulsionante",
        "estabilizante", "conservante", "antioxidante",
        "ácido cítrico", "ácido ascórbico", "ácido láctico",
        "bicarbonato de sódio", "fermento em pó", "baunilha",
        "vanilina", "canela", "gengibre", "curcuma", "colorau",
        "pimenta preta", "alho", "cebola", "tomate", "cenoura",
        "aipo", "alho-porro", "salsa", "manjericão", "orégãos",
        "alecrim", "tomilho", "sumo de limão", "sumo de maçã",
        "sumo de laranja", "passas", "avelãs", "amêndoas", "nozes",
        "amendoins", "cajus", "coco", "mel", "clara de ovo",
        "gema de ovo", "ovo inteiro", "gelatina", "pectina",
        "goma de guar", "goma xantana", "carragenina",
        "carne de vaca", "carne de porco", "frango", "peixe",
        "camarão", "anchovas", "cavala", "salmão", "bacalhau",
        "arroz", "aveia", "farinha de centeio", "cevada",
        "trigo sarraceno", "lentilhas", "ervilhas", "espinafres",
        "brócolos", "couve-flor", "cogumelos", "aroma natural",
        "caramelo", "chocolate negro", "chocolate de leite",
        "extrato de malte", "grão-de-bico",
    ],
    "tr": [
        "su", "şeker", "tuz", "buğday unu", "palm yağı",
        "kanola yağı", "ayçiçek yağı", "zeytinyağı", "kakao yağı",
        "kakao kütlesi", "süt tozu", "peynir altı suyu tozu",
        "laktoz", "tereyağı", "krema", "maya", "glikoz şurubu",
        "fruktoz", "dekstroz", "maltodekstrin", "modifiye nişasta",
        "mısır nişastası", "patates nişastası", "pirinç unu",
        "soya lesitini", "emülgatör", "stabilizatör", "koruyucu",
        "antioksidan", "sitrik asit", "askorbik asit", "laktik asit",
        "sodyum bikarbonat", "kabartma tozu", "vanilya", "vanilin",
        "tarçın", "zencefil", "zerdeçal", "kırmızı biber",
        "karabiber", "sarımsak", "soğan", "domates", "havuç",
        "kereviz", "pırasa", "maydanoz", "fesleğen", "kekik",
        "biberiye", "limon suyu", "elma suyu", "portakal suyu",
        "kuru üzüm", "fındık", "badem", "ceviz", "yer fıstığı",
        "kaju", "hindistan cevizi", "bal", "yumurta akı",
        "yumurta sarısı", "tam yumurta", "jelatin", "pektin",
        "guar zamkı", "ksantan zamkı", "karagenan", "dana eti",
        "tavuk eti", "balık", "karides", "hamsi", "uskumru", "somon",
        "morina", "pirinç", "yulaf", "çavdar unu", "arpa",
        "karabuğday", "mercimek", "nohut", "bezelye", "ıspanak",
        "brokoli", "karnabahar", "mantar", "doğal aroma", "karamel",
        "bitter çikolata", "sütlü çikolata", "malt özü",
    ],
    "ja": [
        "砂糖", "食塩", "小麦粉", "パーム油", "菜種油", "ひまわり油",
        "オリーブ油", "カカオバター", "カカオマス", "全粉乳",
        "脱脂粉乳", "乳糖", "バター", "クリーム", "酵母", "ぶどう糖",
        "果糖", "水あめ", "デキストリン", "加工でん粉",
        "コーンスターチ", "米粉", "大豆レシチン", "乳化剤", "安定剤",
        "保存料", "酸化防止剤", "クエン酸", "アスコルビン酸", "乳酸",
        "重曹", "ベーキングパウダー", "バニラ", "バニリン",
        "シナモン", "しょうが", "ウコン", "パプリカ", "黒こしょう",
        "にんにく", "たまねぎ", "トマト", "にんじん", "セロリ",
        "パセリ", "バジル", "オレガノ", "ローズマリー", "タイム",
        "レモン果汁", "りんご果汁", "オレンジ果汁", "レーズン",
        "ヘーゼルナッツ", "アーモンド", "くるみ", "ピーナッツ",
        "カシューナッツ", "ココナッツ", "はちみつ", "卵白", "卵黄",
        "全卵", "ゼラチン", "ペクチン", "グアーガム", "キサンタンガム",
        "カラギーナン", "牛肉", "豚肉", "鶏肉", "魚肉", "えび",
        "アンチョビ", "さば", "さけ", "たら", "うるち米", "玄米",
        "オーツ麦", "ライ麦粉", "大麦", "そば粉", "レンズ豆",
        "ひよこ豆", "グリーンピース", "ほうれん草", "ブロッコリー",
        "カリフラワー", "マッシュルーム", "香料", "カラメル",
        "ビターチョコレート", "ミルクチョコレート", "麦芽エキス",
        "ねぎ", "抹茶", "きなこ", "みそ", "しょうゆ", "みりん",
        "かつおぶし", "こんぶ", "わかめ", "ごま油", "こめ油",
    ],
    "ar": [
        "ماء", "سكر", "ملح", "دقيق القمح", "زيت النخيل",
        "زيت الكانولا", "زيت عباد الشمس", "زيت الزيتون",
        "زبدة الكاكاو", "كتلة الكاكاو", "حليب مجفف", "لاكتوز",
        "زبدة", "كريمة", "خميرة", "شراب الجلوكوز", "فركتوز",
        "دكستروز", "مالتودكسترين", "نشا معدل", "نشا الذرة",
        "نشا البطاطس", "دقيق الأرز", "ليسيثين الصويا", "مستحلب",
        "مثبت", "مادة حافظة", "مضاد أكسدة", "حمض الستريك",
        "حمض الأسكوربيك", "حمض اللاكتيك", "بيكربونات الصوديوم",
        "مسحوق الخبز", "فانيليا", "فانيلين", "قرفة", "زنجبيل",
        "كركم", "بابريكا", "فلفل أسود", "ثوم", "بصل", "طماطم",
        "جزر", "كرفس", "كراث", "بقدونس", "ريحان", "زعتر",
        "إكليل الجبل", "عصير الليمون", "عصير التفاح",
        "عصير البرتقال", "زبيب", "بندق", "لوز", "جوز",
        "فول سوداني", "كاجو", "جوز الهند", "عسل", "بياض البيض",
        "صفار البيض", "بيض كامل", "جيلاتين", "بكتين", "صمغ الغار",
        "صمغ الزانثان", "كاراجينان", "لحم بقر", "لحم دجاج", "سمك",
        "روبيان", "أنشوجة", "ماكريل", "سلمون", "سمك القد", "أرز",
        "شوفان", "دقيق الجاودار", "شعير", "حنطة سوداء", "عدس",
        "حمص", "بازلاء", "سبانخ", "بروكلي", "قرنبيط", "فطر",
        "نكهة طبيعية", "كراميل", "شوكولاتة داكنة",
        "شوكولاتة بالحليب", "مستخلص الشعير",
    ],
    "th": [
        "น้ำ", "น้ำตาล", "เกลือ", "แป้งสาลี", "น้ำมันปาล์ม",
        "น้ำมันคาโนลา", "น้ำมันดอกทานตะวัน", "น้ำมันมะกอก",
        "เนยโกโก้", "นมผง", "แลคโตส", "เนย", "ครีม", "ยีสต์",
        "น้ำเชื่อมกลูโคส", "ฟรุกโตส", "เดกซ์โทรส",
        "มอลโตเดกซ์ทริน", "สตาร์ชดัดแปร", "แป้งข้าวโพด",
        "แป้งมันฝรั่ง", "แป้งข้าวเจ้า", "เลซิตินถั่วเหลือง",
        "อิมัลซิไฟเออร์", "สารให้ความคงตัว", "วัตถุกันเสีย",
        "สารกันหืน", "กรดซิตริก", "กรดแอสคอร์บิก", "กรดแลคติก",
        "โซเดียมไบคาร์บอเนต", "ผงฟู", "วานิลลา", "วานิลลิน",
        "อบเชย", "ขิง", "ขมิ้น", "พริกหยวก", "พริกไทยดำ",
        "กระเทียม", "หอมใหญ่", "มะเขือเทศ", "แครอท", "ขึ้นฉ่าย",
        "ต้นหอม", "ผักชีฝรั่ง", "โหระพา", "ออริกาโน", "โรสแมรี่",
        "ไทม์", "น้ำมะนาว", "น้ำแอปเปิ้ล", "น้ำส้ม", "ลูกเกด",
        "เฮเซลนัท", "อัลมอนด์", "วอลนัท", "ถั่วลิสง",
        "เม็ดมะม่วงหิมพานต์", "มะพร้าว", "น้ำผึ้ง", "ไข่ขาว",
        "ไข่แดง", "ไข่ทั้งฟอง", "เจลาติน", "เพคติน", "กัวร์กัม",
        "แซนแทนกัม", "คาร์ราจีแนน", "เนื้อวัว", "เนื้อหมู",
        "เนื้อไก่", "ปลา", "กุ้ง", "แอนโชวี่", "ปลาทู",
        "ปลาแซลมอน", "ปลาค็อด", "ข้าว", "ข้าวโอ๊ต",
        "แป้งข้าวไรย์", "ข้าวบาร์เลย์", "บัควีท", "ถั่วเลนทิล",
        "ถั่วลูกไก่", "ถั่วลันเตา", "ผักโขม", "บร็อคโคลี่",
        "กะหล่ำดอก", "เห็ด", "สารแต่งกลิ่นธรรมชาติ", "คาราเมล",
        "ช็อกโกแลตดำ", "ช็อกโกแลตนม", "สารสกัดมอลต์",
    ],
}

# (pattern, bases) per language; {} is replaced by the base term.
PATTERNS = {
    "en": (["{} powder", "{} extract", "dried {}", "{} concentrate",
            "{} syrup", "roasted {}"],
           ["onion", "garlic", "tomato", "ginger", "turmeric", "carrot",
            "apple", "orange", "lemon", "strawberry", "raspberry",
            "banana", "mango", "coffee", "malt", "beetroot", "chicory",
            "rice", "cocoa", "chili"]),
    "no": (["{}pulver", "{}ekstrakt", "tørket {}", "{}konsentrat",
            "{}sirup", "ristet {}"],
           ["løk", "hvitløk", "tomat", "ingefær", "gulrot", "eple",
            "appelsin", "sitron", "jordbær", "bringebær", "banan",
            "mango", "kaffe", "malt", "rødbet", "sikori", "ris",
            "kakao", "chili", "solbær"]),
    "sv": (["{}pulver", "{}extrakt", "torkad {}", "{}koncentrat",
            "{}sirap", "rostad {}"],
           ["lök", "vitlök", "tomat", "ingefära", "morot", "äpple",
            "apelsin", "citron", "jordgubb", "hallon", "banan",
            "mango", "kaffe", "malt", "rödbeta", "cikoria", "ris",
            "kakao", "chili", "svartvinbär"]),
    "da": (["{}pulver", "{}ekstrakt", "tørret {}", "{}koncentrat",
            "{}sirup", "ristet {}"],
           ["løg", "hvidløg", "tomat", "ingefær", "gulerod", "æble",
            "appelsin", "citron", "jordbær", "hindbær", "banan",
            "mango", "kaffe", "malt", "rødbede", "cikorie", "ris",
            "kakao", "chili", "solbær"]),
    "de": (["{}pulver", "{}extrakt", "getrocknete {}", "{}konzentrat",
            "{}sirup", "geröstete {}"],
           ["zwiebel", "knoblauch", "tomaten", "ingwer", "karotten",
            "apfel", "orangen", "zitronen", "erdbeer", "himbeer",
            "bananen", "mango", "kaffee", "malz", "rote bete",
            "chicorée", "reis", "kakao", "chili", "johannisbeer"]),
    "fr": (["poudre de {}", "extrait de {}", "{} séché",
            "concentré de {}", "sirop de {}", "purée de {}"],
           ["oignon", "gingembre", "curcuma", "carotte", "pomme",
            "citron", "fraise", "framboise", "banane", "mangue",
            "café", "malt", "betterave", "chicorée", "riz", "cacao",
            "piment", "cassis", "tomate", "céleri"]),
    "it": (["{} in polvere", "estratto di {}", "{} essiccato",
            "concentrato di {}", "sciroppo di {}", "purea di {}"],
           ["cipolla", "aglio", "pomodoro", "zenzero", "carota",
            "mela", "arancia", "limone", "fragola", "lampone",
            "banana", "mango", "caffè", "malto", "barbabietola",
            "cicoria", "riso", "cacao", "peperoncino", "ribes"]),
    "nl": (["{}poeder", "{}extract", "gedroogde {}", "{}concentraat",
            "{}siroop", "geroosterde {}"],
           ["uien", "knoflook", "tomaten", "gember", "wortel", "appel",
            "sinaasappel", "citroen", "aardbeien", "frambozen",
            "banaan", "mango", "koffie", "mout", "rode biet",
            "cichorei", "rijst", "cacao", "chili", "bessen"]),
    "fi": (["{}jauhe", "{}uute", "kuivattu {}", "{}tiiviste",
            "{}siirappi", "paahdettu {}"],
           ["sipuli", "valkosipuli", "tomaatti", "inkivääri",
            "porkkana", "omena", "appelsiini", "sitruuna", "mansikka",
            "vadelma", "banaani", "mango", "kahvi", "mallas",
            "punajuuri", "sikuri", "riisi", "kaakao", "chili",
            "mustaherukka"]),
    "pt": (["{} em pó", "extrato de {}", "{} seco", "concentrado de {}",
            "xarope de {}", "puré de {}"],
           ["cebola", "alho", "tomate", "gengibre", "cenoura", "maçã",
            "laranja", "limão", "morango", "framboesa", "banana",
            "manga", "café", "malte", "beterraba", "chicória", "arroz",
            "cacau", "pimenta", "groselha"]),
    "tr": (["{} tozu", "{} özü", "kurutulmuş {}", "{} konsantresi",
            "{} şurubu", "kavrulmuş {}"],
           ["soğan", "sarımsak", "domates", "zencefil", "havuç",
            "elma", "portakal", "limon", "çilek", "ahududu", "muz",
            "mango", "kahve", "malt", "pancar", "hindiba", "pirinç",
            "kakao", "biber", "kuşburnu"]),
    "ja": (["{}パウダー", "{}エキス", "乾燥{}", "{}ペースト",
            "{}シロップ", "{}果汁"],
           ["トマト", "しょうが", "にんにく", "たまねぎ", "かぼちゃ",
            "抹茶", "いちご", "りんご", "バナナ", "マンゴー",
            "コーヒー", "ココア", "ビーツ", "ゆず", "うめ", "もも",
            "ぶどう", "メロン", "パイン", "レモン"]),
    "ar": (["مسحوق {}", "مستخلص {}", "{} مجفف", "زيت {}",
            "شراب {}", "عصير {}"],
           ["بصل", "ثوم", "زنجبيل", "كركم", "طماطم", "فراولة",
            "موز", "مانجو", "قهوة", "كاكاو", "شمندر", "ليمون",
            "برتقال", "تفاح", "جزر", "توت", "خوخ", "عنب", "رمان",
            "مشمش"]),
    "th": (["ผง{}", "สารสกัด{}", "{}อบแห้ง", "น้ำมัน{}",
            "น้ำเชื่อม{}", "น้ำ{}เข้มข้น"],
           ["ขิง", "ขมิ้น", "กระเทียม", "หอมใหญ่", "มะเขือเทศ",
            "สตรอเบอร์รี่", "กล้วย", "มะม่วง", "กาแฟ", "โกโก้",
            "บีทรูท", "มะนาว", "ส้ม", "แอปเปิ้ล", "แครอท",
            "องุ่น", "ลิ้นจี่", "สับปะรด", "ทับทิม", "มะตูม"]),
}

MAX_LEN = {"ja": 12}
DEFAULT_MAX_LEN = 28
MIN_ENTRIES = 200


def canonical(value: str) -> str:
    return unicodedata.normalize("NFC", value.strip().casefold())


def load_stopwords() -> set[str]:
    out = set()
    for line in (DATA / "header_stopwords.txt").read_text("utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(canonical(line))
    return out


def build_language(lang: str, stopwords: set[str]) -> list[str]:
    entries: list[str] = []
    seen: set[str] = set()

    def add(entry: str) -> None:
        entry = canonical(entry)
        if entry in seen:
            return
        seen.add(entry)
        entries.append(entry)

    for base in BASES[lang]:
        add(base)
    patterns, subjects = PATTERNS[lang]
    for pattern in patterns:
        for subject in subjects:
            candidate = pattern.replace("{}", subject)
            if len(candidate) <= MAX_LEN.get(lang, DEFAULT_MAX_LEN):
                add(candidate)
    for code in E_NUMBERS:
        add(code)

    max_len = MAX_LEN.get(lang, DEFAULT_MAX_LEN)
    for entry in entries:
        assert entry == canonical(entry), f"{lang}: not canonical: {entry!r}"
        assert len(entry) <= max_len, f"{lang}: too long: {entry!r}"
        assert not (set(entry) & DELIMITER_CHARS), \
            f"{lang}: delimiter inside entry: {entry!r}"
        for word in entry.split():
            assert len(word) >= 2, f"{lang}: 1-cp word in {entry!r}"
            assert word not in stopwords, \
                f"{lang}: header stopword {word!r} inside {entry!r}"
        if any(ch.isdigit() for ch in entry):
            assert E_NUMBER_RE.match(entry), \
                f"{lang}: digits outside additive-code shape: {entry!r}"
    assert len(entries) >= MIN_ENTRIES, \
        f"{lang}: only {len(entries)} entries, need {MIN_ENTRIES}"
    return entries


def main() -> int:
    stopwords = load_stopwords()
    OUT.mkdir(parents=True, exist_ok=True)
    for lang in sorted(BASES):
        entries = build_language(lang, stopwords)
        path = OUT / f"{lang}.txt"
        header = (f"# {lang} ingredient vocabulary, "
                  f"{len(entries)} entries.\n"
                  f"# Generated by scripts/make_vocab.py; edit that "
                  f"script, not this file.\n")
        path.write_text(header + "\n".join(entries) + "\n",
                        encoding="utf-8")
        print(f"{lang}: {len(entries)} entries -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
