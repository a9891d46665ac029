#!/usr/bin/env python3
"""Build the bundled language-ID seed corpora.

Each language file under data/langid_seed/ is generated deterministically
from the hand-written base sentences below: sentences are cycled in seeded
shuffled order and joined two or three to a line until the target size is
reached. Regenerating with the same seeds reproduces the files byte for
byte. The held-out sentences under data/langid_heldout/ are a separate,
disjoint set and are NOT derived from these.

Usage: python tools/build_langid_seed.py [--target-chars 52000] [--out-dir data/langid_seed]
"""

from __future__ import annotations

import argparse
import os
import random

EN_SENTENCES = [
    "The morning train was late again, so the platform filled with impatient commuters.",
    "She poured the coffee slowly and watched the steam rise above the chipped blue mug.",
    "Our neighbors planted three apple trees along the fence at the end of their garden.",
    "The library closes early on Fridays, which always surprises visitors from other towns.",
    "He repaired the old bicycle in the shed and oiled the chain until it ran smoothly.",
    "A sudden storm swept across the valley and bent the young trees almost to the ground.",
    "The committee postponed its decision until the full report could be read aloud.",
    "I keep a small notebook in my pocket for ideas that arrive at awkward moments.",
    "The bakery on the corner sells dark rye bread only on Tuesday and Saturday mornings.",
    "Most of the students finished the experiment before the bell rang for lunch.",
    "The ferry crossing takes forty minutes when the sea is calm and clear.",
    "My grandmother taught me how to fold paper boats from old newspapers.",
    "The museum opened a new wing devoted to photography from the last century.",
    "After the meeting we walked along the river and talked about the coming winter.",
    "The cat sleeps on the warm windowsill every afternoon until the sun moves away.",
    "Fresh snow covered the rooftops, and the whole street seemed quieter than usual.",
    "They painted the kitchen a pale yellow that catches the light in the early morning.",
    "The mechanic explained patiently why the engine made that strange knocking sound.",
    "We missed the last bus and had to walk home through the sleeping town.",
    "The market square smells of roasted chestnuts from October until late December.",
    "Chop the onions finely and let them soften in butter over gentle heat.",
    "The soup needs another pinch of salt and a few leaves of fresh basil.",
    "Knead the dough for ten minutes, then leave it to rise near the warm oven.",
    "His favorite dish remains roast chicken with lemon, garlic, and young potatoes.",
    "Pour the batter into the pan and bake until the edges turn golden brown.",
    "The report must reach the director before noon, or the project will slip again.",
    "Half the office was empty because the flu had spread through the building.",
    "She negotiated the contract line by line until both sides were satisfied.",
    "The printer jammed twice this morning, and nobody knows where the toner lives.",
    "Our team meets briefly every morning to sort the urgent tasks from the rest.",
    "First I multiply both sides by two and then subtract the constant term.",
    "The experiment failed because the temperature sensor had drifted overnight.",
    "If the angle doubles, the area of the triangle grows more slowly than expected.",
    "We measured the voltage three times and took the average of the readings.",
    "The proof follows by induction once the base case has been established.",
    "Light from distant stars bends slightly as it passes close to the sun.",
    "Dividing the total cost by the number of guests gives the price per person.",
    "The result seems plausible, but we should check the boundary conditions again.",
    "Each sample was weighed before and after drying to estimate its water content.",
    "The hypothesis survived every test we could design during the long semester.",
    "The path climbs steeply through the pines before it reaches the open ridge.",
    "We rented a small cottage by the lake where the mornings smell of wet grass.",
    "The night train to the coast leaves from platform nine just before midnight.",
    "Swallows gathered on the wires, a sure sign that summer was nearly over.",
    "The river floods the meadows every spring and leaves behind rich dark soil.",
    "From the lighthouse you can see the whole bay and the islands beyond it.",
    "Pack a warm sweater, because the evenings in the mountains turn cold quickly.",
    "The old bridge sways a little when the wind funnels through the gorge.",
    "The castle on the hill guarded the trade road for more than four centuries.",
    "Archaeologists found coins and pottery beneath the floor of the old chapel.",
    "The choir rehearses in the church hall every Thursday evening in winter.",
    "Her new novel tells the story of three sisters separated by the war.",
    "The festival ends with fireworks over the harbor and music in every street.",
    "Nobody remembers exactly when the fountain in the square stopped flowing.",
    "The children built a fort from blankets and defended it against the dog.",
    "Every Sunday my father wound the clock on the stairs with a small brass key.",
    "We sorted the photographs into boxes and argued gently about the dates.",
    "The attic still holds her skates, though nobody has used them for years.",
    "Dinner grew cold while the twins finished their endless card game.",
    "He trains by the river at dawn, when the towpath belongs to him alone.",
    "The match was decided in the final minute by a lucky deflection.",
    "She swims forty lengths every morning before the pool gets crowded.",
    "Our chess club meets above the pharmacy, and beginners are always welcome.",
    "The referee checked the clock twice before allowing the final corner.",
    "The price of butter rose again, and the baker shook his head at the invoice.",
    "He saved for two years to buy the telescope he had admired as a boy.",
    "The shop gives a small discount if you bring back the glass bottles.",
    "Count the change carefully, because the machine often swallows coins.",
    "Drink more water and rest your eyes after every hour at the screen.",
    "The doctor listened to her breathing and asked about the winter cough.",
    "A short walk after dinner helps more than any pill he ever prescribed.",
    "Fog sat in the valley until noon, then lifted all at once like a curtain.",
    "The forecast promises rain by evening and clearing skies after midnight.",
    "Thunder rolled around the hills for an hour without a single drop falling.",
    "The lock is stiff, so you must lift the gate slightly while turning the key.",
    "Someone left an umbrella on the bench, black with a carved wooden handle.",
    "The lecture ran long, but nobody minded because the questions were good.",
    "Write the address clearly on the back of the envelope before you seal it.",
    "The orchestra tuned quietly while the hall filled with whispering people.",
    "At the end of the street a lamp flickers, marking the way to the old mill.",
]

DE_SENTENCES = [
    "Der Morgenzug hatte wieder Verspätung, und der Bahnsteig füllte sich mit ungeduldigen Pendlern.",
    "Sie goss den Kaffee langsam ein und sah dem Dampf über der blauen Tasse zu.",
    "Unsere Nachbarn pflanzten drei Apfelbäume entlang des Zauns am Ende ihres Gartens.",
    "Die Bibliothek schließt freitags früher, was Besucher aus anderen Städten oft überrascht.",
    "Er reparierte das alte Fahrrad im Schuppen und ölte die Kette, bis sie leise lief.",
    "Ein plötzliches Gewitter zog über das Tal und bog die jungen Bäume fast bis zum Boden.",
    "Der Ausschuss verschob seine Entscheidung, bis der vollständige Bericht vorlag.",
    "Ich trage ein kleines Notizbuch in der Tasche für Einfälle zu ungelegenen Zeiten.",
    "Die Bäckerei an der Ecke verkauft dunkles Roggenbrot nur dienstags und samstags.",
    "Die meisten Schüler beendeten den Versuch, bevor die Glocke zur Mittagspause läutete.",
    "Die Fähre braucht vierzig Minuten, wenn die See ruhig und das Wetter klar ist.",
    "Meine Großmutter zeigte mir, wie man aus alten Zeitungen kleine Boote faltet.",
    "Das Museum eröffnete einen neuen Flügel für Fotografie aus dem letzten Jahrhundert.",
    "Nach der Sitzung gingen wir am Fluss entlang und sprachen über den kommenden Winter.",
    "Die Katze schläft jeden Nachmittag auf der warmen Fensterbank, bis die Sonne wandert.",
    "Frischer Schnee lag auf den Dächern, und die ganze Straße wirkte stiller als sonst.",
    "Sie strichen die Küche in einem hellen Gelb, das am Morgen das Licht einfängt.",
    "Der Mechaniker erklärte geduldig, warum der Motor dieses seltsame Klopfen machte.",
    "Wir verpassten den letzten Bus und mussten durch die schlafende Stadt nach Hause laufen.",
    "Der Marktplatz riecht von Oktober bis Dezember nach gerösteten Kastanien.",
    "Die Zwiebeln fein schneiden und in Butter bei schwacher Hitze glasig dünsten.",
    "Der Suppe fehlen noch eine Prise Salz und ein paar Blätter frisches Basilikum.",
    "Den Teig zehn Minuten kneten und dann neben dem warmen Ofen gehen lassen.",
    "Sein Lieblingsgericht bleibt Brathähnchen mit Zitrone, Knoblauch und jungen Kartoffeln.",
    "Den Teig in die Form gießen und backen, bis die Ränder goldbraun werden.",
    "Der Bericht muss vor zwölf beim Direktor liegen, sonst verzögert sich das Projekt erneut.",
    "Das halbe Büro war leer, weil die Grippe durch das ganze Gebäude gegangen war.",
    "Sie verhandelte den Vertrag Zeile für Zeile, bis beide Seiten zufrieden waren.",
    "Der Drucker klemmte heute schon zweimal, und niemand weiß, wo der Toner liegt.",
    "Unser Team trifft sich jeden Morgen kurz, um die dringenden Aufgaben zu ordnen.",
    "Zuerst multipliziere ich beide Seiten mit zwei und ziehe dann die Konstante ab.",
    "Der Versuch misslang, weil der Temperaturfühler über Nacht verstellt war.",
    "Wenn sich der Winkel verdoppelt, wächst die Fläche des Dreiecks langsamer als erwartet.",
    "Wir maßen die Spannung dreimal und nahmen den Mittelwert der Messungen.",
    "Der Beweis folgt durch Induktion, sobald der Anfangsfall gesichert ist.",
    "Das Licht ferner Sterne wird leicht gebogen, wenn es nahe an der Sonne vorbeiläuft.",
    "Teilt man die Gesamtkosten durch die Zahl der Gäste, erhält man den Preis pro Person.",
    "Das Ergebnis wirkt plausibel, doch wir sollten die Randbedingungen noch einmal prüfen.",
    "Jede Probe wurde vor und nach dem Trocknen gewogen, um den Wassergehalt zu schätzen.",
    "Die Annahme bestand jede Prüfung, die wir uns im langen Semester ausdenken konnten.",
    "Der Pfad steigt steil durch die Kiefern, bevor er den offenen Grat erreicht.",
    "Wir mieteten ein kleines Haus am See, wo die Morgen nach nassem Gras riechen.",
    "Der Nachtzug zur Küste fährt kurz vor Mitternacht von Gleis neun ab.",
    "Schwalben sammelten sich auf den Drähten, ein sicheres Zeichen für das Ende des Sommers.",
    "Der Fluss überschwemmt die Wiesen jedes Frühjahr und hinterlässt dunklen, fetten Boden.",
    "Vom Leuchtturm aus sieht man die ganze Bucht und die Inseln dahinter.",
    "Pack einen warmen Pullover ein, denn die Abende in den Bergen werden schnell kalt.",
    "Die alte Brücke schwankt ein wenig, wenn der Wind durch die Schlucht drückt.",
    "Die Burg auf dem Hügel bewachte die Handelsstraße mehr als vier Jahrhunderte lang.",
    "Archäologen fanden Münzen und Scherben unter dem Boden der alten Kapelle.",
    "Der Chor probt im Winter jeden Donnerstagabend im Saal der Kirche.",
    "Ihr neuer Roman erzählt von drei Schwestern, die der Krieg getrennt hat.",
    "Das Fest endet mit Feuerwerk über dem Hafen und Musik in allen Gassen.",
    "Niemand weiß mehr genau, wann der Brunnen auf dem Platz versiegt ist.",
    "Die Kinder bauten eine Burg aus Decken und verteidigten sie gegen den Hund.",
    "Jeden Sonntag zog mein Vater die Uhr im Flur mit einem kleinen Messingschlüssel auf.",
    "Wir sortierten die Fotografien in Schachteln und stritten freundlich über die Jahreszahlen.",
    "Auf dem Dachboden liegen noch ihre Schlittschuhe, obwohl sie niemand mehr benutzt.",
    "Das Essen wurde kalt, während die Zwillinge ihr endloses Kartenspiel beendeten.",
    "Er trainiert im Morgengrauen am Fluss, wenn der Uferweg ihm allein gehört.",
    "Das Spiel wurde in der letzten Minute durch einen glücklichen Abpraller entschieden.",
    "Sie schwimmt jeden Morgen vierzig Bahnen, bevor das Becken sich füllt.",
    "Unser Schachklub trifft sich über der Apotheke, und Anfänger sind immer willkommen.",
    "Der Schiedsrichter prüfte zweimal die Uhr, bevor er die letzte Ecke zuließ.",
    "Der Butterpreis stieg erneut, und der Bäcker schüttelte den Kopf über die Rechnung.",
    "Er sparte zwei Jahre für das Fernrohr, das er schon als Junge bewundert hatte.",
    "Der Laden gibt einen kleinen Nachlass, wenn man die Glasflaschen zurückbringt.",
    "Zähl das Wechselgeld genau, denn der Automat verschluckt öfter Münzen.",
    "Trink mehr Wasser und gönn den Augen nach jeder Stunde am Bildschirm eine Pause.",
    "Die Ärztin hörte ihre Atmung ab und fragte nach dem Husten im Winter.",
    "Ein kurzer Spaziergang nach dem Essen hilft mehr als jede Tablette, sagte er.",
    "Der Nebel lag bis mittags im Tal und hob sich dann mit einem Mal wie ein Vorhang.",
    "Der Wetterbericht verspricht Regen am Abend und klaren Himmel nach Mitternacht.",
    "Eine Stunde lang rollte der Donner um die Hügel, ohne dass ein Tropfen fiel.",
    "Das Schloss klemmt, darum muss man das Tor leicht anheben, während man den Schlüssel dreht.",
    "Jemand ließ einen Schirm auf der Bank liegen, schwarz, mit geschnitztem Holzgriff.",
    "Der Vortrag dauerte länger, doch niemand störte sich daran, weil die Fragen gut waren.",
    "Schreib die Adresse deutlich auf die Rückseite des Umschlags, bevor du ihn zuklebst.",
    "Das Orchester stimmte leise, während sich der Saal mit flüsterndem Publikum füllte.",
    "Am Ende der Straße flackert eine Laterne und weist den Weg zur alten Mühle.",
]

FR_SENTENCES = [
    "Le train du matin avait encore du retard, et le quai se remplissait de voyageurs impatients.",
    "Elle versa le café lentement et regarda la vapeur monter au-dessus de la tasse bleue.",
    "Nos voisins ont planté trois pommiers le long de la clôture au fond de leur jardin.",
    "La bibliothèque ferme plus tôt le vendredi, ce qui surprend toujours les visiteurs de passage.",
    "Il a réparé le vieux vélo dans la remise et huilé la chaîne jusqu'à ce qu'elle tourne sans bruit.",
    "Un orage soudain a traversé la vallée et couché les jeunes arbres presque jusqu'au sol.",
    "Le comité a repoussé sa décision en attendant la lecture du rapport complet.",
    "Je garde un petit carnet dans ma poche pour les idées qui arrivent au mauvais moment.",
    "La boulangerie du coin ne vend son pain de seigle que le mardi et le samedi matin.",
    "La plupart des élèves ont terminé l'expérience avant que la cloche sonne le déjeuner.",
    "La traversée en ferry dure quarante minutes quand la mer est calme et claire.",
    "Ma grand-mère m'a appris à plier des bateaux de papier avec de vieux journaux.",
    "Le musée a ouvert une nouvelle aile consacrée à la photographie du siècle dernier.",
    "Après la réunion, nous avons marché le long du fleuve en parlant de l'hiver qui vient.",
    "Le chat dort chaque après-midi sur le rebord chaud de la fenêtre, jusqu'à ce que le soleil tourne.",
    "La neige fraîche couvrait les toits, et toute la rue semblait plus silencieuse que d'habitude.",
    "Ils ont peint la cuisine d'un jaune pâle qui attrape la lumière du petit matin.",
    "Le mécanicien expliqua patiemment pourquoi le moteur faisait ce drôle de cognement.",
    "Nous avons raté le dernier bus et traversé à pied la ville endormie.",
    "La place du marché sent la châtaigne grillée d'octobre à la fin décembre.",
    "Émincez les oignons finement et laissez-les fondre dans le beurre à feu doux.",
    "La soupe demande encore une pincée de sel et quelques feuilles de basilic frais.",
    "Pétrissez la pâte dix minutes, puis laissez-la lever près du four tiède.",
    "Son plat préféré reste le poulet rôti au citron, à l'ail et aux pommes de terre nouvelles.",
    "Versez la pâte dans le moule et faites cuire jusqu'à ce que les bords soient dorés.",
    "Le rapport doit être chez le directeur avant midi, sinon le projet prendra encore du retard.",
    "La moitié du bureau était vide parce que la grippe avait couru dans tout l'immeuble.",
    "Elle a négocié le contrat ligne par ligne jusqu'à satisfaire les deux parties.",
    "L'imprimante s'est bloquée deux fois ce matin, et personne ne sait où se trouve l'encre.",
    "Notre équipe se réunit brièvement chaque matin pour trier les tâches urgentes.",
    "D'abord je multiplie les deux côtés par deux, puis je soustrais le terme constant.",
    "L'expérience a échoué parce que la sonde de température avait dérivé pendant la nuit.",
    "Si l'angle double, l'aire du triangle augmente plus lentement qu'on ne l'attend.",
    "Nous avons mesuré la tension trois fois et pris la moyenne des relevés.",
    "La preuve se fait par récurrence une fois le cas de base établi.",
    "La lumière des étoiles lointaines se courbe légèrement en passant près du soleil.",
    "En divisant le coût total par le nombre d'invités, on obtient le prix par personne.",
    "Le résultat paraît plausible, mais il faudrait revérifier les conditions aux limites.",
    "Chaque échantillon a été pesé avant et après séchage pour estimer sa teneur en eau.",
    "L'hypothèse a résisté à tous les tests que nous avons pu imaginer pendant le semestre.",
    "Le sentier grimpe raide à travers les pins avant d'atteindre la crête dégagée.",
    "Nous avons loué une petite maison au bord du lac, où les matins sentent l'herbe mouillée.",
    "Le train de nuit pour la côte part du quai neuf juste avant minuit.",
    "Les hirondelles se rassemblaient sur les fils, signe certain que l'été touchait à sa fin.",
    "La rivière inonde les prés chaque printemps et laisse derrière elle une terre sombre et riche.",
    "Du phare, on voit toute la baie et les îles qui s'étendent au-delà.",
    "Emporte un pull chaud, car les soirées en montagne fraîchissent très vite.",
    "Le vieux pont tremble un peu quand le vent s'engouffre dans la gorge.",
    "Le château sur la colline a gardé la route marchande pendant plus de quatre siècles.",
    "Les archéologues ont trouvé des pièces et des poteries sous le sol de la vieille chapelle.",
    "La chorale répète tous les jeudis soir d'hiver dans la salle paroissiale.",
    "Son nouveau roman raconte l'histoire de trois sœurs séparées par la guerre.",
    "La fête se termine par un feu d'artifice sur le port et de la musique dans chaque rue.",
    "Personne ne se rappelle exactement quand la fontaine de la place a cessé de couler.",
    "Les enfants ont bâti un fort avec des couvertures et l'ont défendu contre le chien.",
    "Chaque dimanche, mon père remontait l'horloge de l'escalier avec une petite clé de laiton.",
    "Nous avons trié les photographies dans des boîtes en discutant doucement des dates.",
    "Le grenier garde encore ses patins, même si personne ne les a chaussés depuis des années.",
    "Le dîner refroidissait pendant que les jumeaux finissaient leur interminable partie de cartes.",
    "Il s'entraîne au bord du fleuve à l'aube, quand le chemin de halage lui appartient.",
    "Le match s'est joué à la dernière minute sur une déviation chanceuse.",
    "Elle nage quarante longueurs chaque matin avant que la piscine se remplisse.",
    "Notre club d'échecs se réunit au-dessus de la pharmacie, et les débutants sont bienvenus.",
    "L'arbitre vérifia deux fois l'horloge avant d'accorder le dernier corner.",
    "Le prix du beurre a encore monté, et le boulanger a secoué la tête devant la facture.",
    "Il a économisé deux ans pour acheter la lunette qu'il admirait quand il était enfant.",
    "La boutique accorde une petite remise si l'on rapporte les bouteilles en verre.",
    "Compte bien la monnaie, car la machine avale souvent les pièces.",
    "Bois plus d'eau et repose tes yeux après chaque heure passée devant l'écran.",
    "Le médecin écouta sa respiration et l'interrogea sur sa toux de l'hiver.",
    "Une courte promenade après le dîner aide plus que tous les comprimés du monde.",
    "Le brouillard resta dans la vallée jusqu'à midi, puis se leva d'un coup comme un rideau.",
    "La météo promet de la pluie pour le soir et un ciel dégagé après minuit.",
    "Le tonnerre a roulé autour des collines pendant une heure sans qu'une goutte tombe.",
    "La serrure est dure, il faut soulever un peu le portail en tournant la clé.",
    "Quelqu'un a oublié un parapluie sur le banc, noir, avec un manche de bois sculpté.",
    "La conférence a duré plus longtemps, mais personne ne s'en est plaint tant les questions étaient bonnes.",
    "Écris l'adresse lisiblement au dos de l'enveloppe avant de la cacheter.",
    "L'orchestre s'accordait doucement pendant que la salle se remplissait de chuchotements.",
    "Au bout de la rue, une lanterne vacille et marque le chemin du vieux moulin.",
]

ES_SENTENCES = [
    "El tren de la mañana volvió a llegar tarde, y el andén se llenó de viajeros impacientes.",
    "Ella sirvió el café despacio y miró el vapor subir sobre la taza azul desportillada.",
    "Nuestros vecinos plantaron tres manzanos junto a la cerca, al fondo de su jardín.",
    "La biblioteca cierra temprano los viernes, lo que siempre sorprende a los visitantes.",
    "Arregló la bicicleta vieja en el cobertizo y engrasó la cadena hasta que giró sin ruido.",
    "Una tormenta repentina cruzó el valle y dobló los árboles jóvenes casi hasta el suelo.",
    "El comité aplazó su decisión hasta poder leer el informe completo.",
    "Llevo una libreta pequeña en el bolsillo para las ideas que llegan a deshora.",
    "La panadería de la esquina solo vende pan de centeno los martes y los sábados.",
    "La mayoría de los alumnos terminó el experimento antes de que sonara la campana.",
    "El ferry tarda cuarenta minutos cuando el mar está tranquilo y el cielo despejado.",
    "Mi abuela me enseñó a doblar barcos de papel con periódicos viejos.",
    "El museo abrió una sala nueva dedicada a la fotografía del siglo pasado.",
    "Después de la reunión caminamos junto al río hablando del invierno que se acerca.",
    "El gato duerme cada tarde en el alféizar caliente hasta que el sol se aparta.",
    "La nieve fresca cubría los tejados y toda la calle parecía más silenciosa que de costumbre.",
    "Pintaron la cocina de un amarillo pálido que recoge la luz de la mañana.",
    "El mecánico explicó con paciencia por qué el motor hacía ese golpeteo extraño.",
    "Perdimos el último autobús y volvimos a pie por la ciudad dormida.",
    "La plaza del mercado huele a castañas asadas desde octubre hasta fin de diciembre.",
    "Pica la cebolla muy fina y déjala ablandarse en mantequilla a fuego suave.",
    "A la sopa le falta una pizca de sal y unas hojas de albahaca fresca.",
    "Amasa la masa diez minutos y déjala crecer junto al horno templado.",
    "Su plato favorito sigue siendo el pollo asado con limón, ajo y patatas nuevas.",
    "Vierte la mezcla en el molde y hornea hasta que los bordes queden dorados.",
    "El informe debe estar en el despacho del director antes del mediodía, o el proyecto se retrasará.",
    "Media oficina estaba vacía porque la gripe había recorrido todo el edificio.",
    "Negoció el contrato línea por línea hasta que ambas partes quedaron conformes.",
    "La impresora se atascó dos veces esta mañana y nadie sabe dónde está el tóner.",
    "Nuestro equipo se reúne cada mañana un momento para ordenar las tareas urgentes.",
    "Primero multiplico ambos lados por dos y luego resto el término constante.",
    "El experimento falló porque el sensor de temperatura se había desviado durante la noche.",
    "Si el ángulo se duplica, el área del triángulo crece más despacio de lo esperado.",
    "Medimos el voltaje tres veces y tomamos el promedio de las lecturas.",
    "La demostración sale por inducción una vez asegurado el caso base.",
    "La luz de las estrellas lejanas se curva un poco al pasar cerca del sol.",
    "Al dividir el costo total entre el número de invitados se obtiene el precio por persona.",
    "El resultado parece razonable, pero conviene revisar otra vez las condiciones de contorno.",
    "Cada muestra se pesó antes y después del secado para estimar su contenido de agua.",
    "La hipótesis resistió todas las pruebas que pudimos idear durante el semestre.",
    "El sendero sube empinado entre los pinos antes de alcanzar la cresta abierta.",
    "Alquilamos una casita junto al lago donde las mañanas huelen a hierba mojada.",
    "El tren nocturno hacia la costa sale del andén nueve poco antes de medianoche.",
    "Las golondrinas se juntaban en los cables, señal segura de que el verano terminaba.",
    "El río inunda los prados cada primavera y deja una tierra oscura y fértil.",
    "Desde el faro se ve toda la bahía y las islas que quedan más allá.",
    "Mete un jersey de abrigo, porque las tardes en la montaña refrescan enseguida.",
    "El puente viejo se balancea un poco cuando el viento se cuela por la garganta.",
    "El castillo de la colina vigiló el camino de los mercaderes durante más de cuatro siglos.",
    "Los arqueólogos hallaron monedas y cerámica bajo el suelo de la capilla vieja.",
    "El coro ensaya los jueves por la tarde en el salón de la iglesia durante el invierno.",
    "Su nueva novela cuenta la historia de tres hermanas separadas por la guerra.",
    "La fiesta termina con fuegos artificiales sobre el puerto y música en todas las calles.",
    "Nadie recuerda con exactitud cuándo dejó de manar la fuente de la plaza.",
    "Los niños levantaron un fuerte con mantas y lo defendieron del perro.",
    "Cada domingo mi padre daba cuerda al reloj de la escalera con una llavecita de latón.",
    "Ordenamos las fotografías en cajas y discutimos sin enfado sobre las fechas.",
    "En el desván siguen sus patines, aunque nadie los usa desde hace años.",
    "La cena se enfriaba mientras los gemelos terminaban su interminable partida de cartas.",
    "Entrena junto al río al amanecer, cuando el camino de sirga es solo suyo.",
    "El partido se decidió en el último minuto por un rebote afortunado.",
    "Nada cuarenta largos cada mañana antes de que la piscina se llene.",
    "Nuestro club de ajedrez se reúne encima de la farmacia y los principiantes son bienvenidos.",
    "El árbitro miró el reloj dos veces antes de conceder el último córner.",
    "El precio de la mantequilla subió otra vez y el panadero meneó la cabeza ante la factura.",
    "Ahorró dos años para comprar el telescopio que admiraba desde niño.",
    "La tienda hace un pequeño descuento si devuelves las botellas de vidrio.",
    "Cuenta bien el cambio, porque la máquina se traga las monedas a menudo.",
    "Bebe más agua y descansa la vista después de cada hora frente a la pantalla.",
    "La doctora escuchó su respiración y le preguntó por la tos del invierno.",
    "Un paseo corto después de cenar ayuda más que cualquier pastilla.",
    "La niebla se quedó en el valle hasta el mediodía y luego se alzó de golpe como un telón.",
    "El pronóstico anuncia lluvia al anochecer y cielo despejado después de medianoche.",
    "El trueno rodó por las colinas durante una hora sin que cayera una sola gota.",
    "La cerradura está dura, así que hay que alzar un poco el portón mientras giras la llave.",
    "Alguien dejó un paraguas en el banco, negro y con el mango de madera tallada.",
    "La charla se alargó, pero a nadie le importó porque las preguntas eran buenas.",
    "Escribe la dirección con claridad en el dorso del sobre antes de cerrarlo.",
    "La orquesta afinaba en voz baja mientras la sala se llenaba de murmullos.",
    "Al final de la calle parpadea un farol que señala el camino al molino viejo.",
]

IT_SENTENCES = [
    "Il treno del mattino era di nuovo in ritardo e il binario si riempiva di pendolari impazienti.",
    "Versò il caffè lentamente e guardò il vapore salire sopra la tazza azzurra sbeccata.",
    "I nostri vicini hanno piantato tre meli lungo la recinzione in fondo al giardino.",
    "La biblioteca chiude prima il venerdì, cosa che sorprende sempre i visitatori di passaggio.",
    "Ha riparato la vecchia bicicletta nel capanno e ha oliato la catena finché non girava senza rumore.",
    "Un temporale improvviso ha attraversato la valle e piegato gli alberi giovani quasi fino a terra.",
    "Il comitato ha rinviato la decisione finché il rapporto completo non fosse stato letto.",
    "Tengo un piccolo taccuino in tasca per le idee che arrivano nei momenti sbagliati.",
    "Il forno all'angolo vende il pane di segale soltanto il martedì e il sabato mattina.",
    "La maggior parte degli studenti finì l'esperimento prima che suonasse la campanella.",
    "La traversata in traghetto dura quaranta minuti quando il mare è calmo e limpido.",
    "Mia nonna mi ha insegnato a piegare barchette di carta con i giornali vecchi.",
    "Il museo ha aperto una nuova ala dedicata alla fotografia del secolo scorso.",
    "Dopo la riunione abbiamo camminato lungo il fiume parlando dell'inverno in arrivo.",
    "Il gatto dorme ogni pomeriggio sul davanzale caldo finché il sole non si sposta.",
    "La neve fresca copriva i tetti e tutta la via sembrava più silenziosa del solito.",
    "Hanno dipinto la cucina di un giallo pallido che raccoglie la luce del primo mattino.",
    "Il meccanico spiegò con pazienza perché il motore faceva quel battito strano.",
    "Abbiamo perso l'ultimo autobus e siamo tornati a piedi per la città addormentata.",
    "La piazza del mercato profuma di castagne arrostite da ottobre a fine dicembre.",
    "Trita la cipolla finemente e lasciala appassire nel burro a fuoco dolce.",
    "Alla minestra mancano ancora un pizzico di sale e qualche foglia di basilico fresco.",
    "Impasta per dieci minuti, poi lascia lievitare vicino al forno tiepido.",
    "Il suo piatto preferito resta il pollo arrosto con limone, aglio e patate novelle.",
    "Versa il composto nello stampo e cuoci finché i bordi non diventano dorati.",
    "Il rapporto deve arrivare al direttore prima di mezzogiorno, altrimenti il progetto slitta ancora.",
    "Metà ufficio era vuoto perché l'influenza aveva girato per tutto il palazzo.",
    "Ha trattato il contratto riga per riga finché le due parti non sono rimaste soddisfatte.",
    "La stampante si è inceppata due volte stamattina e nessuno sa dove sia il toner.",
    "La nostra squadra si riunisce ogni mattina per separare i compiti urgenti dagli altri.",
    "Prima moltiplico entrambi i lati per due e poi sottraggo il termine costante.",
    "L'esperimento è fallito perché il sensore di temperatura era andato alla deriva durante la notte.",
    "Se l'angolo raddoppia, l'area del triangolo cresce più lentamente del previsto.",
    "Abbiamo misurato la tensione tre volte e preso la media delle letture.",
    "La dimostrazione procede per induzione una volta stabilito il caso base.",
    "La luce delle stelle lontane si piega leggermente passando vicino al sole.",
    "Dividendo il costo totale per il numero degli invitati si ottiene il prezzo a persona.",
    "Il risultato sembra plausibile, ma conviene ricontrollare le condizioni al contorno.",
    "Ogni campione è stato pesato prima e dopo l'essiccazione per stimare il contenuto d'acqua.",
    "L'ipotesi ha superato tutte le prove che siamo riusciti a inventare durante il semestre.",
    "Il sentiero sale ripido tra i pini prima di raggiungere il crinale aperto.",
    "Abbiamo affittato una casetta sul lago dove le mattine profumano d'erba bagnata.",
    "Il treno notturno per la costa parte dal binario nove poco prima di mezzanotte.",
    "Le rondini si radunavano sui fili, segno sicuro che l'estate stava finendo.",
    "Il fiume allaga i prati ogni primavera e lascia una terra scura e fertile.",
    "Dal faro si vede tutta la baia e le isole che stanno oltre.",
    "Metti in valigia un maglione pesante, perché la sera in montagna rinfresca in fretta.",
    "Il vecchio ponte oscilla un poco quando il vento si infila nella gola.",
    "Il castello sulla collina ha sorvegliato la strada dei mercanti per più di quattro secoli.",
    "Gli archeologi hanno trovato monete e ceramiche sotto il pavimento della vecchia cappella.",
    "Il coro prova ogni giovedì sera d'inverno nella sala della parrocchia.",
    "Il suo nuovo romanzo racconta la storia di tre sorelle separate dalla guerra.",
    "La festa si chiude con i fuochi sul porto e la musica in ogni strada.",
    "Nessuno ricorda più con precisione quando la fontana della piazza ha smesso di scorrere.",
    "I bambini hanno costruito un fortino di coperte e lo hanno difeso dal cane.",
    "Ogni domenica mio padre caricava l'orologio delle scale con una piccola chiave d'ottone.",
    "Abbiamo ordinato le fotografie nelle scatole discutendo con calma sulle date.",
    "In soffitta ci sono ancora i suoi pattini, anche se nessuno li usa da anni.",
    "La cena si raffreddava mentre i gemelli finivano la loro interminabile partita a carte.",
    "Si allena lungo il fiume all'alba, quando l'alzaia appartiene soltanto a lui.",
    "La partita si è decisa all'ultimo minuto per una deviazione fortunata.",
    "Nuota quaranta vasche ogni mattina prima che la piscina si riempia.",
    "Il nostro circolo di scacchi si riunisce sopra la farmacia e i principianti sono benvenuti.",
    "L'arbitro controllò due volte l'orologio prima di concedere l'ultimo angolo.",
    "Il prezzo del burro è salito di nuovo e il fornaio ha scosso la testa davanti alla fattura.",
    "Ha risparmiato due anni per comprare il telescopio che ammirava da ragazzo.",
    "Il negozio concede un piccolo sconto se riporti le bottiglie di vetro.",
    "Conta bene il resto, perché la macchinetta inghiotte spesso le monete.",
    "Bevi più acqua e riposa gli occhi dopo ogni ora passata davanti allo schermo.",
    "La dottoressa ascoltò il suo respiro e le chiese della tosse invernale.",
    "Una breve passeggiata dopo cena aiuta più di qualunque pastiglia.",
    "La nebbia rimase nella valle fino a mezzogiorno, poi si alzò di colpo come un sipario.",
    "Le previsioni promettono pioggia in serata e cielo sereno dopo mezzanotte.",
    "Il tuono ha girato intorno alle colline per un'ora senza che cadesse una goccia.",
    "La serratura è dura, quindi bisogna sollevare un po' il cancello mentre giri la chiave.",
    "Qualcuno ha lasciato un ombrello sulla panchina, nero, con il manico di legno intagliato.",
    "La conferenza è durata a lungo, ma nessuno se n'è lamentato perché le domande erano belle.",
    "Scrivi l'indirizzo in modo chiaro sul retro della busta prima di chiuderla.",
    "L'orchestra accordava piano mentre la sala si riempiva di sussurri.",
    "In fondo alla via una lampada tremola e indica la strada verso il vecchio mulino.",
]

CORPORA = {
    "en": EN_SENTENCES,
    "de": DE_SENTENCES,
    "fr": FR_SENTENCES,
    "es": ES_SENTENCES,
    "it": IT_SENTENCES,
}


def expand(sentences: list[str], seed: str, target_chars: int) -> str:
    """Cycle the base sentences in seeded shuffled order until the target size."""
    rng = random.Random(seed)
    pool: list[str] = []
    lines: list[str] = []
    total = 0
    while total < target_chars:
        if len(pool) < 3:
            refill = list(sentences)
            rng.shuffle(refill)
            pool.extend(refill)
        take = 2 if rng.random() < 0.6 else 3
        line = " ".join(pool.pop(0) for _ in range(take))
        lines.append(line)
        total += len(line) + 1
    return "\n".join(lines) + "\n"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--target-chars", type=int, default=52000)
    parser.add_argument("--out-dir", default="data/langid_seed")
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    for code, sentences in sorted(CORPORA.items()):
        text = expand(sentences, seed=f"langid-seed:{code}", target_chars=args.target_chars)
        path = os.path.join(args.out_dir, f"{code}.txt")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"{path}: {len(text)} chars, {len(sentences)} base sentences")


if __name__ == "__main__":
    main()
