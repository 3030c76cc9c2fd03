class Sample
{
    String s = "a\tb";
}
