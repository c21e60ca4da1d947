namespace PoiKit.Util
{
    public class Foo
    {
        public int Tag()
        {
            return 1;
        }
    }
}
