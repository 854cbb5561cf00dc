int flag;

void main()
{
#pragma omp parallel
    {
        int mine;
#pragma omp master
        { flag = 1; }
        mine = flag;
    }
}
