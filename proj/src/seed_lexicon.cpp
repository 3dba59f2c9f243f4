// Bundled seed lexicon. Kept in the same TSV shape as external lexicon files
// so one loader handles both. Multiple lines per surface give alternative
// readings; the first line is the preferred one.

#include "entitree/lexicon.hpp"

namespace entitree {
namespace {

const char* kClosedClass = R"lex(
# determiners
a	a	det
an	a	det
the	the	det
some	some	det
all	all	det
any	any	det
each	each	det
every	every	det
both	both	det
no	no	det
another	another	det
other	other	det

# pronouns
it	it	pron
they	they	pron	plural
he	he	pron
she	she	pron
this	this	pron
these	these	pron	plural
those	those	pron	plural
that	that	pron
we	we	pron	plural
you	you	pron
i	i	pron
them	they	pron	plural
him	he	pron
her	she	pron
us	we	pron	plural
me	i	pron
its	it	pron
his	he	pron
their	they	pron	plural
my	i	pron
your	you	pron
our	we	pron	plural
who	who	pron
whom	who	pron
which	which	pron
what	what	pron

# copula (forms of "be")
be	be	cop
is	be	cop
are	be	cop
was	be	cop
were	be	cop
been	be	cop
being	be	cop
am	be	cop

# prepositions
on	on	prep
in	in	prep
at	at	prep
of	of	prep
for	for	prep
with	with	prep
by	by	prep
to	to	prep
from	from	prep
into	into	prep
onto	onto	prep
under	under	prep
over	over	prep
about	about	prep
after	after	prep
before	before	prep
between	between	prep
through	through	prep
during	during	prep
without	without	prep
within	within	prep
near	near	prep
behind	behind	prep
across	across	prep
against	against	prep
along	along	prep
around	around	prep
off	off	prep
upon	upon	prep
among	among	prep
per	per	prep
via	via	prep
inside	inside	prep
outside	outside	prep
beside	beside	prep
until	until	prep
since	since	prep
toward	toward	prep
towards	toward	prep

# conjunctions
and	and	conj
or	or	conj
but	but	conj
nor	nor	conj
so	so	conj
yet	yet	conj
while	while	conj
although	although	conj
because	because	conj
if	if	conj
when	when	conj
whereas	whereas	conj
then	then	conj

# adverbs
not	not	adv
also	also	adv
only	only	adv
very	very	adv
often	often	adv
always	always	adv
never	never	adv
usually	usually	adv
sometimes	sometimes	adv
already	already	adv
still	still	adv
there	there	adv
here	here	adv
now	now	adv
too	too	adv
again	again	adv
once	once	adv
twice	twice	adv
directly	directly	adv
automatically	automatically	adv
immediately	immediately	adv
currently	currently	adv
typically	typically	adv

# number words
zero	zero	num
one	one	num
two	two	num
three	three	num
four	four	num
five	five	num
six	six	num
seven	seven	num
eight	eight	num
nine	nine	num
ten	ten	num
eleven	eleven	num
twelve	twelve	num
thirteen	thirteen	num
fourteen	fourteen	num
fifteen	fifteen	num
sixteen	sixteen	num
seventeen	seventeen	num
eighteen	eighteen	num
nineteen	nineteen	num
twenty	twenty	num
thirty	thirty	num
forty	forty	num
fifty	fifty	num
sixty	sixty	num
seventy	seventy	num
eighty	eighty	num
ninety	ninety	num
hundred	hundred	num
)lex";

const char* kNouns = R"lex(
# nouns (requirements register + worked examples)
customer	customer	noun
product	product	noun
person	person	noun
people	person	noun	plural
description	description	noun
category	category	noun
price	price	noun
level	level	noun
boss	boss	noun
user	user	noun
nickname	nickname	noun
guy	guy	noun
uniform	uniform	noun
passenger	passenger	noun
backseat	backseat	noun
car	car	noun
cat	cat	noun
mat	mat	noun
man	man	noun
men	man	noun	plural
woman	woman	noun
women	woman	noun	plural
child	child	noun
children	child	noun	plural
foot	foot	noun
feet	foot	noun	plural
mouse	mouse	noun
mice	mouse	noun	plural
sign	sign	noun
system	system	noun
account	account	noun
order	order	noun
item	item	noun
name	name	noun
email	email	noun
address	address	noun
database	database	noun
record	record	noun
password	password	noun
admin	admin	noun
administrator	administrator	noun
manager	manager	noun
employee	employee	noun
company	company	noun
project	project	noun
task	task	noun
list	list	noun
page	page	noun
button	button	noun
file	file	noun
document	document	noun
report	report	noun
date	date	noun
text	text	noun
number	number	noun
message	message	noun
student	student	noun
teacher	teacher	noun
course	course	noun
book	book	noun
library	library	noun
author	author	noun
article	article	noun
comment	comment	noun
post	post	noun
blog	blog	noun
site	site	noun
website	website	noun
server	server	noun
client	client	noun
service	service	noun
request	request	noun
response	response	noun
invoice	invoice	noun
payment	payment	noun
cart	cart	noun
store	store	noun
shop	shop	noun
dog	dog	noun
house	house	noun
tree	tree	noun
table	table	noun
chair	chair	noun
room	room	noun
door	door	noun
window	window	noun
school	school	noun
police	police	noun
officer	officer	noun
driver	driver	noun
vehicle	vehicle	noun
bus	bus	noun
train	train	noun
ticket	ticket	noun
seat	seat	noun
flight	flight	noun
plane	plane	noun
airport	airport	noun
hotel	hotel	noun
guest	guest	noun
reservation	reservation	noun
menu	menu	noun
dish	dish	noun
meal	meal	noun
restaurant	restaurant	noun
waiter	waiter	noun
chef	chef	noun
kitchen	kitchen	noun
phone	phone	noun
laptop	laptop	noun
computer	computer	noun
keyboard	keyboard	noun
screen	screen	noun
printer	printer	noun
network	network	noun
router	router	noun
device	device	noun
sensor	sensor	noun
signal	signal	noun
alarm	alarm	noun
camera	camera	noun
image	image	noun
photo	photo	noun
video	video	noun
song	song	noun
album	album	noun
artist	artist	noun
band	band	noun
movie	movie	noun
actor	actor	noun
director	director	noun
scene	scene	noun
script	script	noun
stage	stage	noun
show	show	noun
game	game	noun
player	player	noun
team	team	noun
coach	coach	noun
match	match	noun
score	score	noun
goal	goal	noun
ball	ball	noun
field	field	noun
court	court	noun
club	club	noun
member	member	noun
group	group	noun
event	event	noun
meeting	meeting	noun
agenda	agenda	noun
note	note	noun
letter	letter	noun
parcel	parcel	noun
package	package	noun
box	box	noun
bag	bag	noun
bottle	bottle	noun
glass	glass	noun
cup	cup	noun
plate	plate	noun
city	city	noun
country	country	noun
street	street	noun
bank	bank	noun
code	code	noun
status	status	noun
role	role	noun
profile	profile	noun
session	session	noun
key	key	noun
value	value	noun
type	type	noun
model	model	noun
view	view	noun
supplier	supplier	noun
warehouse	warehouse	noun
stock	stock	noun
quantity	quantity	noun
discount	discount	noun
tax	tax	noun
total	total	noun
amount	amount	noun
balance	balance	noun
transaction	transaction	noun
receipt	receipt	noun
shipment	shipment	noun
delivery	delivery	noun
courier	courier	noun
notification	notification	noun
setting	setting	noun
permission	permission	noun
owner	owner	noun
wallet	wallet	noun
coupon	coupon	noun
review	review	noun
rating	rating	noun
answer	answer	noun
question	question	noun
lesson	lesson	noun
grade	grade	noun
exam	exam	noun
branch	branch	noun
department	department	noun
salary	salary	noun
contract	contract	noun
patient	patient	noun
doctor	doctor	noun
nurse	nurse	noun
hospital	hospital	noun
appointment	appointment	noun
prescription	prescription	noun
medicine	medicine	noun
)lex";

const char* kVerbs = R"lex(
# verbs (base forms)
buy	buy	verb
sell	sell	verb
have	have	verb
has	have	verb
had	have	verb
own	own	verb
contain	contain	verb
hold	hold	verb
log	log	verb
register	register	verb
create	create	verb
read	read	verb
update	update	verb
delete	delete	verb
manage	manage	verb
send	send	verb
receive	receive	verb
write	write	verb
submit	submit	verb
approve	approve	verb
reject	reject	verb
assign	assign	verb
track	track	verb
process	process	verb
handle	handle	verb
display	display	verb
edit	edit	verb
remove	remove	verb
add	add	verb
search	search	verb
find	find	verb
select	select	verb
choose	choose	verb
pay	pay	verb
ship	ship	verb
deliver	deliver	verb
cancel	cancel	verb
return	return	verb
exist	exist	verb
arrive	arrive	verb
sit	sit	verb
run	run	verb
walk	walk	verb
eat	eat	verb
drink	drink	verb
sleep	sleep	verb
play	play	verb
watch	watch	verb
listen	listen	verb
speak	speak	verb
say	say	verb
tell	tell	verb
ask	ask	verb
teach	teach	verb
learn	learn	verb
study	study	verb
work	work	verb
live	live	verb
love	love	verb
like	like	verb
want	want	verb
need	need	verb
make	make	verb
take	take	verb
give	give	verb
get	get	verb
put	put	verb
use	use	verb
see	see	verb
know	know	verb
think	think	verb
feel	feel	verb
go	go	verb
come	come	verb
leave	leave	verb
open	open	adj
open	open	verb
close	close	verb
start	start	verb
stop	stop	verb
begin	begin	verb
end	end	verb
belong	belong	verb
include	include	verb
require	require	verb
provide	provide	verb
support	support	verb
access	access	verb
notify	notify	verb
validate	validate	verb
verify	verify	verb
generate	generate	verb
print	print	verb
save	save	verb
load	load	verb
crash	crash	verb
restart	restart	verb
reboot	reboot	verb
browse	browse	verb
click	click	verb
upload	upload	verb
download	download	verb
share	share	verb
publish	publish	verb
subscribe	subscribe	verb
rate	rate	verb
reply	reply	verb
follow	follow	verb
place	place	verb
confirm	confirm	verb
refund	refund	verb
exchange	exchange	verb
wear	wear	verb
drive	drive	verb
fly	fly	verb
travel	travel	verb
visit	visit	verb
stay	stay	verb
check	check	verb
reserve	reserve	verb
rent	rent	verb
serve	serve	verb
cook	cook	verb
clean	clean	verb
fix	fix	verb
repair	repair	verb
build	build	verb
design	design	verb
test	test	verb
deploy	deploy	verb
monitor	monitor	verb
export	export	verb
import	import	verb
archive	archive	verb
restore	restore	verb
schedule	schedule	verb
plan	plan	verb
organize	organize	verb
attend	attend	verb
join	join	verb
invite	invite	verb
accept	accept	verb
decline	decline	verb
complete	complete	verb
finish	finish	verb
fail	fail	verb
succeed	succeed	verb
win	win	verb
lose	lose	verb
press	press	verb
push	push	verb
pull	pull	verb
move	move	verb
copy	copy	verb
paste	paste	verb
insert	insert	verb
grant	grant	verb
revoke	revoke	verb
block	block	verb
unlock	unlock	verb
lock	lock	verb
enable	enable	verb
disable	disable	verb
activate	activate	verb
expire	expire	verb
renew	renew	verb
extend	extend	verb

# irregular verb forms
bought	buy	verb
sold	sell	verb
went	go	verb
gone	go	verb
ran	run	verb
ate	eat	verb
eaten	eat	verb
wrote	write	verb
written	write	verb
sent	send	verb
sat	sit	verb
held	hold	verb
got	get	verb
gave	give	verb
given	give	verb
took	take	verb
taken	take	verb
made	make	verb
came	come	verb
left	leave	verb
paid	pay	verb
found	find	verb
chose	choose	verb
chosen	choose	verb
said	say	verb
told	tell	verb
taught	teach	verb
saw	see	verb
seen	see	verb
knew	know	verb
known	know	verb
thought	think	verb
felt	feel	verb
spoke	speak	verb
spoken	speak	verb
wore	wear	verb
worn	wear	verb
drove	drive	verb
driven	drive	verb
flew	fly	verb
flown	fly	verb
won	win	verb
lost	lose	verb
built	build	verb
slept	sleep	verb
drank	drink	verb
kept	keep	verb
keep	keep	verb
met	meet	verb
meet	meet	verb
)lex";

const char* kAdjectives = R"lex(
# adjectives
new	new	adj
old	old	adj
big	big	adj
small	small	adj
large	large	adj
red	red	adj
blue	blue	adj
green	green	adj
young	young	adj
optional	optional	adj
main	main	adj
primary	primary	adj
secondary	secondary	adj
active	active	adj
inactive	inactive	adj
valid	valid	adj
invalid	invalid	adj
high	high	adj
low	low	adj
long	long	adj
short	short	adj
full	full	adj
empty	empty	adj
closed	closed	adj
free	free	adj
busy	busy	adj
available	available	adj
unavailable	unavailable	adj
unique	unique	adj
public	public	adj
private	private	adj
current	current	adj
previous	previous	adj
next	next	adj
first	first	adj
last	last	adj
final	final	adj
initial	initial	adj
simple	simple	adj
complex	complex	adj
important	important	adj
urgent	urgent	adj
good	good	adj
bad	bad	adj
great	great	adj
nice	nice	adj
happy	happy	adj
sad	sad	adj
fast	fast	adj
slow	slow	adj
strong	strong	adj
weak	weak	adj
heavy	heavy	adj
light	light	adj
dark	dark	adj
bright	bright	adj
dirty	dirty	adj
hot	hot	adj
cold	cold	adj
warm	warm	adj
cool	cool	adj
expensive	expensive	adj
cheap	cheap	adj
personal	personal	adj
digital	digital	adj
mobile	mobile	adj
online	online	adj
offline	offline	adj
internal	internal	adj
external	external	adj
single	single	adj
double	double	adj
daily	daily	adj
weekly	weekly	adj
monthly	monthly	adj
annual	annual	adj
standard	standard	adj
custom	custom	adj
default	default	adj
specific	specific	adj
general	general	adj
correct	correct	adj
wrong	wrong	adj
possible	possible	adj
impossible	impossible	adj
necessary	necessary	adj
different	different	adj
similar	similar	adj
additional	additional	adj
extra	extra	adj
temporary	temporary	adj
permanent	permanent	adj
automatic	automatic	adj
manual	manual	adj
secure	secure	adj
safe	safe	adj
registered	registered	adj
famous	famous	adj
French	french	adj
English	english	adj
American	american	adj
European	european	adj

# plural quantifier adjectives (marked plural, never kept as attributes)
multiple	multiple	adj	plural
many	many	adj	plural
several	several	adj	plural
few	few	adj	plural
various	various	adj	plural
numerous	numerous	adj	plural
)lex";

}  // namespace

Lexicon Lexicon::seed() {
  Lexicon lex;
  lex.load_text(kClosedClass, "<seed:closed>");
  lex.load_text(kNouns, "<seed:nouns>");
  lex.load_text(kVerbs, "<seed:verbs>");
  lex.load_text(kAdjectives, "<seed:adjectives>");
  return lex;
}

}  // namespace entitree
