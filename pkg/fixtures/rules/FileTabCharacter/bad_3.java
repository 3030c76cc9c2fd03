class Sample
{
    String s = "a	b";
}
